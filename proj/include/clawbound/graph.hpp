#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawbound/errors.hpp"
#include "clawbound/vertex_set.hpp"

namespace clawbound {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bit row
// per vertex.  Loops and parallel edges are rejected/collapsed on input.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n)), VertexSet(n)) {}

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("add_edge: loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    bool operator==(const Graph& o) const = default;

private:
    static int check_order(int n) {
        if (n < 0) throw input_error("Graph: negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
    return g;
}

// N[v] = N(v) ∪ {v}
inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.set(v);
    return s;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("is_connected: empty graph");
    VertexSet seen(n);
    seen.set(0);
    // Frontier expansion on whole bit rows; terminates within n rounds.
    while (true) {
        VertexSet next = seen;
        seen.for_each([&](int v) { next |= g.neighbors(v); });
        if (next == seen) break;
        seen = next;
    }
    return seen.count() == n;
}

// Position map for the Cartesian product: vertex (g, h) lives at flat index
// h * |V(G)| + g, so each H-fiber (copy of G) is one contiguous block.
struct ProductIndexMap {
    int ng = 0;
    int nh = 0;

    int flat(int g, int h) const {
        if (g < 0 || g >= ng || h < 0 || h >= nh)
            throw input_error("ProductIndexMap: coordinate (" + std::to_string(g) + "," +
                              std::to_string(h) + ") out of range");
        return h * ng + g;
    }
    std::pair<int, int> unflat(int p) const {
        if (p < 0 || p >= ng * nh)
            throw input_error("ProductIndexMap: flat index " + std::to_string(p) + " out of range");
        return {p % ng, p / ng};
    }
};

// G □ H: (g,h) ~ (g',h') iff (g=g' and h~h') or (h=h' and g~g').
inline std::pair<Graph, ProductIndexMap> cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw input_error("cartesian_product: empty factor");
    ProductIndexMap pm{g.vertex_count(), h.vertex_count()};
    Graph p(pm.ng * pm.nh);
    for (int b = 0; b < pm.nh; ++b)
        for (int a = 0; a < pm.ng; ++a) {
            g.neighbors(a).for_each([&](int a2) {
                if (a2 > a) p.add_edge(pm.flat(a, b), pm.flat(a2, b));
            });
            h.neighbors(b).for_each([&](int b2) {
                if (b2 > b) p.add_edge(pm.flat(a, b), pm.flat(a, b2));
            });
        }
    return {std::move(p), pm};
}

// An induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
    int center = -1;
    std::array<int, 3> leaves{-1, -1, -1};

    std::string to_string() const {
        return "center " + std::to_string(center) + ", leaves {" + std::to_string(leaves[0]) +
               "," + std::to_string(leaves[1]) + "," + std::to_string(leaves[2]) + "}";
    }
};

// First claw in (center, leaf-triple) lexicographic order, if any.
inline std::optional<ClawWitness> find_claw(const Graph& g) {
    const int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        const std::vector<int> nb = g.neighbors(c).to_vector();
        const std::size_t d = nb.size();
        if (d < 3) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < d; ++l) {
                    if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
                    return ClawWitness{c, {nb[i], nb[j], nb[l]}};
                }
            }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

}  // namespace clawbound
