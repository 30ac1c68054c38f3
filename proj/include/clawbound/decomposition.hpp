#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"
#include "clawbound/vertex_set.hpp"

namespace clawbound {

// Subsets of gamma positions 0..k-1 travel as bit masks; k never exceeds the
// 62-vertex graph cap.
using IndexMask = std::uint64_t;

inline IndexMask index_bit(int i) { return IndexMask{1} << i; }

inline std::vector<int> mask_to_indices(IndexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline std::string mask_to_string(IndexMask m) {
    std::ostringstream os;
    bool sep = false;
    for (int i : mask_to_indices(m)) {
        if (sep) os << ',';
        os << i;
        sep = true;
    }
    return os.str();
}

// Partition of V(G) induced by an independent dominating set Γ = (v_0..v_{k-1}):
// P_i holds the outside vertices adjacent to v_i alone, P_S (|S| >= 2) those
// adjacent to exactly {v_i : i in S}.  Cell Q_i = {v_i} ∪ P_i.
struct CellDecomposition {
    int n = 0;                                      // order of the host graph
    std::vector<int> gamma;                         // Γ in witness order
    std::vector<VertexSet> private_classes;         // P_i by position
    std::map<IndexMask, VertexSet> shared_classes;  // P_S keyed by index mask
    std::vector<IndexMask> vertex_mask;             // per vertex: positions of its Γ-neighbors,
                                                    // or its own position bit for Γ members

    int k() const { return static_cast<int>(gamma.size()); }

    bool in_gamma(int v) const {
        for (int g : gamma)
            if (g == v) return true;
        return false;
    }

    VertexSet cell(int i) const {
        check_position(i);
        VertexSet q = private_classes[static_cast<std::size_t>(i)];
        q.set(gamma[static_cast<std::size_t>(i)]);
        return q;
    }

    void check_position(int i) const {
        if (i < 0 || i >= k())
            throw input_error("gamma position " + std::to_string(i) + " out of range [0," +
                              std::to_string(k()) + ")");
    }
};

inline CellDecomposition decompose(const Graph& g, const std::vector<int>& gamma) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(gamma.size());
    if (k == 0) throw input_error("decompose: empty gamma set");
    if (k > 62) throw input_error("decompose: gamma sets above 62 positions unsupported");

    CellDecomposition dec;
    dec.n = n;
    dec.gamma = gamma;
    dec.private_classes.assign(static_cast<std::size_t>(k), VertexSet(n));
    dec.vertex_mask.assign(static_cast<std::size_t>(n), 0);

    VertexSet members(n);
    for (int i = 0; i < k; ++i) {
        const int v = gamma[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n)
            throw input_error("decompose: gamma vertex " + std::to_string(v) + " out of range");
        if (members.test(v))
            throw input_error("decompose: duplicate gamma vertex " + std::to_string(v));
        members.set(v);
        dec.vertex_mask[static_cast<std::size_t>(v)] = index_bit(i);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(gamma[static_cast<std::size_t>(i)], gamma[static_cast<std::size_t>(j)]))
                throw input_error("decompose: gamma not independent, edge {" +
                                  std::to_string(gamma[static_cast<std::size_t>(i)]) + "," +
                                  std::to_string(gamma[static_cast<std::size_t>(j)]) + "}");

    for (int v = 0; v < n; ++v) {
        if (members.test(v)) continue;
        IndexMask m = 0;
        for (int i = 0; i < k; ++i)
            if (g.has_edge(v, gamma[static_cast<std::size_t>(i)])) m |= index_bit(i);
        if (m == 0)
            throw input_error("decompose: gamma not dominating, vertex " + std::to_string(v) +
                              " uncovered");
        dec.vertex_mask[static_cast<std::size_t>(v)] = m;
        if (std::popcount(m) == 1) {
            dec.private_classes[static_cast<std::size_t>(std::countr_zero(m))].set(v);
        } else {
            auto [it, fresh] = dec.shared_classes.try_emplace(m, VertexSet(n));
            it->second.set(v);
        }
    }
    return dec;
}

// C(Q_I) = ∪_{i in I} Q_i ∪ ∪_{S ⊆ I} P_S.
inline VertexSet chamber(const CellDecomposition& dec, IndexMask I) {
    if ((I >> dec.k()) != 0)  // k <= 62, shift is well-defined
        throw input_error("chamber: index set " + mask_to_string(I) + " has positions beyond k=" +
                          std::to_string(dec.k()));
    VertexSet c(dec.n);
    for (int i : mask_to_indices(I)) {
        c |= dec.private_classes[static_cast<std::size_t>(i)];
        c.set(dec.gamma[static_cast<std::size_t>(i)]);
    }
    for (const auto& [mask, verts] : dec.shared_classes)
        if ((mask & ~I) == 0) c |= verts;
    return c;
}

struct EdgeWitness {
    int u = -1, v = -1;
    std::string context;
};

// Structural facts that hold for cell decompositions of claw-free graphs:
//  (a) every shared class has exactly two indices,
//  (b) shared classes with disjoint index sets have no cross edges,
//  (c) no edges between P_j and any shared class avoiding j.
// Skipped (applicable=false) when the host graph has a claw.
struct StructuralReport {
    bool applicable = true;
    std::optional<ClawWitness> claw;
    bool shared_pairs_only = true;
    bool no_disjoint_shared_edges = true;
    bool no_private_shared_edges = true;
    std::vector<IndexMask> oversized_classes;
    std::vector<EdgeWitness> edge_violations;

    bool pass() const {
        return applicable && shared_pairs_only && no_disjoint_shared_edges &&
               no_private_shared_edges;
    }
};

inline StructuralReport verify_structural_observations(const Graph& g,
                                                       const CellDecomposition& dec) {
    StructuralReport rep;
    if (auto claw = find_claw(g)) {
        rep.applicable = false;
        rep.claw = claw;
        return rep;
    }

    auto cross_edge = [&](const VertexSet& a, const VertexSet& b) -> std::optional<EdgeWitness> {
        for (int u = a.first(); u >= 0; u = a.next_after(u)) {
            VertexSet hit = g.neighbors(u) & b;
            if (!hit.empty()) return EdgeWitness{u, hit.first(), ""};
        }
        return std::nullopt;
    };

    for (const auto& [mask, verts] : dec.shared_classes)
        if (std::popcount(mask) > 2) {
            rep.shared_pairs_only = false;
            rep.oversized_classes.push_back(mask);
        }

    for (auto it = dec.shared_classes.begin(); it != dec.shared_classes.end(); ++it)
        for (auto jt = std::next(it); jt != dec.shared_classes.end(); ++jt) {
            if (it->first & jt->first) continue;  // overlapping index sets may touch
            if (auto w = cross_edge(it->second, jt->second)) {
                w->context = "shared P_{" + mask_to_string(it->first) + "} x shared P_{" +
                             mask_to_string(jt->first) + "}";
                rep.no_disjoint_shared_edges = false;
                rep.edge_violations.push_back(*w);
            }
        }

    for (int i = 0; i < dec.k(); ++i)
        for (const auto& [mask, verts] : dec.shared_classes) {
            if (mask & index_bit(i)) continue;
            if (auto w = cross_edge(dec.private_classes[static_cast<std::size_t>(i)], verts)) {
                w->context = "private P_" + std::to_string(i) + " x shared P_{" +
                             mask_to_string(mask) + "}";
                rep.no_private_shared_edges = false;
                rep.edge_violations.push_back(*w);
            }
        }
    return rep;
}

// JSON drill-down: classes keyed by sorted index lists, 0-based throughout.
inline nlohmann::ordered_json decomposition_to_json(const CellDecomposition& dec) {
    nlohmann::ordered_json j;
    j["n"] = dec.n;
    j["gamma"] = dec.gamma;
    nlohmann::ordered_json priv = nlohmann::ordered_json::object();
    for (int i = 0; i < dec.k(); ++i)
        priv[std::to_string(i)] = dec.private_classes[static_cast<std::size_t>(i)].to_vector();
    j["private"] = std::move(priv);
    nlohmann::ordered_json shared = nlohmann::ordered_json::object();
    for (const auto& [mask, verts] : dec.shared_classes)
        shared[mask_to_string(mask)] = verts.to_vector();
    j["shared"] = std::move(shared);
    return j;
}

}  // namespace clawbound
