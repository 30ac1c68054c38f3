#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"

namespace clawbound {

// Canonical representative: the vertex order minimizing the upper-triangle
// adjacency bit string read in graph6 column order.  Integer comparison of
// the packed value (bit j of the string at machine bit 63-j) equals string
// comparison, and placing one more vertex appends exactly its adjacency
// column, so a prefix-pruned backtracking search stays cheap.  Capped at 11
// vertices (55 triangle bits) which covers every enumeration this tool runs.

inline constexpr int kCanonicalMaxVertices = 11;

namespace detail {

struct CanonSearch {
    int n = 0;
    std::array<std::uint64_t, 12> row{};  // adjacency masks
    std::uint64_t best = ~std::uint64_t{0};
    bool have = false;
    std::array<int, 12> order{}, best_order{};

    void dfs(int t, std::uint64_t used, std::uint64_t cur, int base) {
        if (t == n) {
            if (!have || cur < best) {
                have = true;
                best = cur;
                best_order = order;
            }
            return;
        }
        struct Cand {
            std::uint64_t add;
            int v;
        };
        std::array<Cand, 12> cs;
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t add = 0;
            for (int i = 0; i < t; ++i)
                if ((row[static_cast<std::size_t>(v)] >> order[static_cast<std::size_t>(i)]) & 1)
                    add |= std::uint64_t{1} << (63 - (base + i));
            cs[static_cast<std::size_t>(nc++)] = {add, v};
        }
        std::sort(cs.begin(), cs.begin() + nc, [](const Cand& a, const Cand& b) {
            return a.add < b.add || (a.add == b.add && a.v < b.v);
        });
        const int newbase = base + t;
        const std::uint64_t prefix =
            newbase == 0 ? 0 : (~std::uint64_t{0} << (64 - newbase));
        for (int ci = 0; ci < nc; ++ci) {
            const std::uint64_t ncur = cur | cs[static_cast<std::size_t>(ci)].add;
            // Candidates are sorted, so once one exceeds the best prefix the
            // rest do too.  Equal prefixes must still be explored.
            if (have && (ncur & prefix) > (best & prefix)) break;
            order[static_cast<std::size_t>(t)] = cs[static_cast<std::size_t>(ci)].v;
            dfs(t + 1, used | (std::uint64_t{1} << cs[static_cast<std::size_t>(ci)].v), ncur,
                newbase);
        }
    }
};

}  // namespace detail

struct CanonicalForm {
    std::uint64_t key = 0;  // packed minimal bit string, n tagged in the low bits
    Graph graph;            // relabeled into the canonical order
};

inline CanonicalForm canonicalize(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > kCanonicalMaxVertices)
        throw input_error("canonicalize: order " + std::to_string(n) + " outside [1," +
                          std::to_string(kCanonicalMaxVertices) + "]");
    detail::CanonSearch s;
    s.n = n;
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each(
            [&](int u) { s.row[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u; });
    s.dfs(0, 0, 0, 0);
    CanonicalForm out;
    out.key = s.best | static_cast<std::uint64_t>(n);  // 55 data bits leave room for n <= 63
    out.graph = Graph(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if ((s.row[static_cast<std::size_t>(s.best_order[static_cast<std::size_t>(p)])] >>
                 s.best_order[static_cast<std::size_t>(q)]) &
                1)
                out.graph.add_edge(p, q);
    return out;
}

// All connected graphs on n vertices, one canonical representative per
// isomorphism class, sorted by canonical key.  Built level by level: every
// class on k vertices arises from some class on k-1 vertices (possibly
// disconnected) by attaching one vertex with an arbitrary neighborhood.
inline std::vector<Graph> enumerate_connected_graphs(int n, int cap = 7) {
    if (n < 1) throw input_error("enumerate_connected_graphs: n must be >= 1");
    if (cap > 10) throw config_error("enumerate_connected_graphs: cap above the supported 10");
    if (n > cap)
        throw config_error("enumerate_connected_graphs: n=" + std::to_string(n) +
                           " above cap " + std::to_string(cap));

    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> next;
        for (const Graph& parent : level) {
            Graph base(k);
            for (int u = 0; u < k - 1; ++u)
                parent.neighbors(u).for_each([&](int v) {
                    if (v > u) base.add_edge(u, v);
                });
            const std::uint64_t masks = std::uint64_t{1} << (k - 1);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                Graph child = base;
                for (int u = 0; u < k - 1; ++u)
                    if ((mask >> u) & 1) child.add_edge(u, k - 1);
                CanonicalForm cf = canonicalize(child);
                if (seen.insert(cf.key).second) next.emplace_back(cf.key, std::move(cf.graph));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(next.size());
        for (auto& [key, graph] : next) level.push_back(std::move(graph));
    }

    std::vector<Graph> out;
    for (Graph& g : level)
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace clawbound
