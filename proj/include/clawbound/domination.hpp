#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"
#include "clawbound/vertex_set.hpp"

namespace clawbound {

inline bool is_dominating_set(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw input_error("is_dominating_set: set universe " +
                          std::to_string(s.universe_size()) + " does not match graph order " +
                          std::to_string(g.vertex_count()));
    VertexSet covered(g.vertex_count());
    s.for_each([&](int v) { covered |= closed_neighborhood(g, v); });
    return covered.count() == g.vertex_count();
}

inline bool is_dominating_set(const Graph& g, const std::vector<int>& members) {
    VertexSet s(g.vertex_count());
    for (int v : members) {
        if (v < 0 || v >= g.vertex_count())
            throw input_error("is_dominating_set: member " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return is_dominating_set(g, s);
}

struct DominationResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t node_count = 0;  // search nodes expanded across all passes
};

namespace detail {

// Branch and bound over bit rows.  Branches on an undominated vertex with the
// fewest eligible dominators; the lower bound greedily packs undominated
// vertices whose eligible dominator sets are pairwise disjoint (each needs
// its own pick).  `independent` restricts eligibility to non-neighbors of
// the chosen set.
struct DomSearch {
    const Graph& g;
    bool independent;
    int n;
    VertexSet all;
    std::vector<VertexSet> nbhd;  // closed neighborhoods

    int bound_exclusive = 0;  // only accept solutions strictly below this
    bool decision_mode = false;
    bool found = false;
    int best_size = 0;
    VertexSet best;
    std::uint64_t nodes = 0;

    explicit DomSearch(const Graph& graph, bool indep)
        : g(graph), independent(indep), n(graph.vertex_count()), all(VertexSet::full(n)) {
        nbhd.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) nbhd.push_back(closed_neighborhood(g, v));
    }

    static constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

    int packing_bound(const VertexSet& undominated, const VertexSet& eligible) const {
        VertexSet used(n);
        int count = 0;
        for (int v = undominated.first(); v >= 0; v = undominated.next_after(v)) {
            VertexSet dv = nbhd[static_cast<std::size_t>(v)] & eligible;
            if (dv.empty()) return kInfeasible;  // nobody can ever dominate v
            if (!dv.intersects(used)) {
                ++count;
                used |= dv;
            }
        }
        return count;
    }

    // Greedy max-coverage; in independent mode any undominated vertex is its
    // own eligible dominator, so progress is guaranteed.
    VertexSet greedy() {
        VertexSet chosen(n), dominated(n), eligible = all;
        while (!(dominated == all)) {
            int pick = -1, gain = -1;
            for (int v = eligible.first(); v >= 0; v = eligible.next_after(v)) {
                const int c = (nbhd[static_cast<std::size_t>(v)] - dominated).count();
                if (c > gain) {
                    gain = c;
                    pick = v;
                }
            }
            if (pick < 0 || gain == 0) throw internal_error("greedy domination stalled");
            chosen.set(pick);
            dominated |= nbhd[static_cast<std::size_t>(pick)];
            if (independent)
                eligible -= nbhd[static_cast<std::size_t>(pick)];
            else
                eligible.reset(pick);
        }
        return chosen;
    }

    void dfs(const VertexSet& chosen, int cnt, const VertexSet& dominated, VertexSet eligible) {
        ++nodes;
        if (dominated == all) {
            if (decision_mode) {
                found = true;
            } else if (cnt < best_size) {
                best_size = cnt;
                best = chosen;
            }
            return;
        }
        const VertexSet undominated = all - dominated;
        const int lb = packing_bound(undominated, eligible);
        if (cnt + lb >= bound_exclusive) return;

        // branch vertex: undominated, fewest eligible dominators
        int bv = -1, bcount = std::numeric_limits<int>::max();
        for (int v = undominated.first(); v >= 0; v = undominated.next_after(v)) {
            const int c = (nbhd[static_cast<std::size_t>(v)] & eligible).count();
            if (c < bcount) {
                bcount = c;
                bv = v;
            }
        }
        VertexSet cands = nbhd[static_cast<std::size_t>(bv)] & eligible;
        // Left-to-right exclusion: after the branch including u, u leaves the
        // eligible pool, so no solution is enumerated twice.
        for (int u = cands.first(); u >= 0; u = cands.next_after(u)) {
            VertexSet c2 = chosen;
            c2.set(u);
            VertexSet e2 = eligible;
            if (independent)
                e2 -= nbhd[static_cast<std::size_t>(u)];
            else
                e2.reset(u);
            dfs(c2, cnt + 1, dominated | nbhd[static_cast<std::size_t>(u)], e2);
            if (decision_mode && found) return;
            eligible.reset(u);
        }
    }

    // Minimum size + some witness; witness refined to lex-least afterwards.
    int optimize() {
        best = greedy();
        best_size = best.count();
        bound_exclusive = best_size;
        decision_mode = false;
        dfs(VertexSet(n), 0, VertexSet(n), all);
        return best_size;
    }

    // Is there a (independent) dominating set of size <= limit that contains
    // `prefix` and otherwise only uses vertices from `pool`?
    bool decide(const VertexSet& prefix, const VertexSet& pool, int limit) {
        VertexSet dominated(n), eligible = pool;
        int cnt = 0;
        for (int v = prefix.first(); v >= 0; v = prefix.next_after(v)) {
            dominated |= nbhd[static_cast<std::size_t>(v)];
            if (independent) eligible -= nbhd[static_cast<std::size_t>(v)];
            ++cnt;
        }
        bound_exclusive = limit + 1;
        decision_mode = true;
        found = false;
        dfs(prefix, cnt, dominated, eligible);
        return found;
    }
};

// Lexicographically least minimum set, built by forcing one vertex at a time
// and asking whether an optimal completion using only later vertices exists.
inline VertexSet lexmin_witness(DomSearch& s, int value) {
    const int n = s.n;
    VertexSet prefix(n);
    int last = -1;
    for (int picked = 0; picked < value; ++picked) {
        bool extended = false;
        for (int v = last + 1; v < n; ++v) {
            // keep the forced prefix independent in that mode
            if (s.independent && prefix.intersects(s.nbhd[static_cast<std::size_t>(v)])) continue;
            VertexSet p2 = prefix;
            p2.set(v);
            VertexSet pool(n);
            for (int u = v + 1; u < n; ++u) pool.set(u);
            if (s.decide(p2, pool, value)) {
                prefix = p2;
                last = v;
                extended = true;
                break;
            }
        }
        if (!extended) throw internal_error("lexmin witness extension failed");
    }
    return prefix;
}

inline DominationResult solve(const Graph& g, bool independent) {
    if (g.vertex_count() == 0) throw input_error("domination: empty graph");
    DomSearch s(g, independent);
    DominationResult r;
    r.value = s.optimize();
    r.witness = lexmin_witness(s, r.value);
    r.node_count = s.nodes;
    return r;
}

}  // namespace detail

inline DominationResult domination_number(const Graph& g) { return detail::solve(g, false); }

inline DominationResult min_independent_dominating_set(const Graph& g) {
    return detail::solve(g, true);
}

inline constexpr int kBruteForceMaxVertices = 16;

// Exhaustive oracle: subsets in increasing cardinality, lexicographic within
// a cardinality, first hit returned.  Deliberately free of solver cleverness.
inline DominationResult brute_force_gamma(const Graph& g, bool independent_only = false) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("brute_force_gamma: empty graph");
    if (n > kBruteForceMaxVertices)
        throw input_error("brute_force_gamma: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(kBruteForceMaxVertices));

    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n)), open(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 0;
        g.neighbors(v).for_each([&](int u) { m |= std::uint32_t{1} << u; });
        open[static_cast<std::size_t>(v)] = m;
        closed[static_cast<std::size_t>(v)] = m | (std::uint32_t{1} << v);
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

    std::uint64_t checked = 0;
    std::vector<int> comb;
    for (int size = 1; size <= n; ++size) {
        comb.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            ++checked;
            std::uint32_t covered = 0, members = 0;
            bool indep_ok = true;
            for (int v : comb) {
                if (independent_only && (open[static_cast<std::size_t>(v)] & members)) {
                    indep_ok = false;
                    break;
                }
                members |= std::uint32_t{1} << v;
                covered |= closed[static_cast<std::size_t>(v)];
            }
            if (indep_ok && covered == full) {
                DominationResult r;
                r.value = size;
                r.witness = VertexSet(n);
                for (int v : comb) r.witness.set(v);
                r.node_count = checked;
                return r;
            }
            // next combination in lexicographic order
            int i = size - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw internal_error("brute_force_gamma: no dominating set found");
}

inline constexpr int kAllMinimumMaxVertices = 20;

// Every minimum dominating set, in lexicographic order.
inline std::vector<VertexSet> all_minimum_dominating_sets(const Graph& g,
                                                          int max_n = kAllMinimumMaxVertices) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("all_minimum_dominating_sets: empty graph");
    if (n > max_n)
        throw input_error("all_minimum_dominating_sets: " + std::to_string(n) +
                          " vertices exceeds cap " + std::to_string(max_n));
    const int gamma = domination_number(g).value;

    std::vector<VertexSet> nbhd;
    nbhd.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbhd.push_back(closed_neighborhood(g, v));
    // suffix_cover[v] = union of N[u] for u >= v
    std::vector<VertexSet> suffix_cover(static_cast<std::size_t>(n + 1), VertexSet(n));
    for (int v = n - 1; v >= 0; --v)
        suffix_cover[static_cast<std::size_t>(v)] =
            suffix_cover[static_cast<std::size_t>(v + 1)] | nbhd[static_cast<std::size_t>(v)];

    const VertexSet all = VertexSet::full(n);
    std::vector<VertexSet> out;
    std::vector<int> stack;

    auto dfs = [&](auto&& self, int next, const VertexSet& dominated) -> void {
        if (static_cast<int>(stack.size()) == gamma) {
            if (dominated == all) {
                VertexSet s(n);
                for (int v : stack) s.set(v);
                out.push_back(s);
            }
            return;
        }
        if (next >= n) return;
        if (!(dominated | suffix_cover[static_cast<std::size_t>(next)]).contains_all(all)) return;
        const int remaining = gamma - static_cast<int>(stack.size());
        int max_gain = 0;
        const int need = (all - dominated).count();
        for (int v = next; v < n && max_gain * remaining < need; ++v) {
            const int gain = (nbhd[static_cast<std::size_t>(v)] - dominated).count();
            if (gain > max_gain) max_gain = gain;
        }
        if (max_gain * remaining < need) return;
        for (int v = next; v < n; ++v) {
            stack.push_back(v);
            self(self, v + 1, dominated | nbhd[static_cast<std::size_t>(v)]);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, VertexSet(n));
    return out;
}

struct AllanLaskarRecord {
    int gamma = 0;
    VertexSet gamma_witness;
    int independent = 0;
    VertexSet independent_witness;
    bool pass = false;  // the two numbers agree
    std::uint64_t node_count = 0;
};

// Exact check of domination number vs. independent domination number.
// Meaningful only for claw-free inputs, so a claw is refused up front.
inline AllanLaskarRecord verify_allan_laskar(const Graph& g) {
    if (auto claw = find_claw(g))
        throw input_error("verify_allan_laskar: graph has a claw (" + claw->to_string() + ")");
    const DominationResult d = domination_number(g);
    const DominationResult i = min_independent_dominating_set(g);
    AllanLaskarRecord r;
    r.gamma = d.value;
    r.gamma_witness = d.witness;
    r.independent = i.value;
    r.independent_witness = i.witness;
    r.pass = d.value == i.value;
    r.node_count = d.node_count + i.node_count;
    return r;
}

}  // namespace clawbound
