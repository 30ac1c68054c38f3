#pragma once

#include <utility>
#include <vector>

#include "clawbound/graph.hpp"

namespace fixtures {

inline clawbound::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return clawbound::from_edge_list(n, e);
}

inline clawbound::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return clawbound::from_edge_list(n, e);
}

inline clawbound::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return clawbound::from_edge_list(n, e);
}

// K_{1,k}: vertex 0 is the center
inline clawbound::Graph star(int k) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= k; ++v) e.emplace_back(0, v);
    return clawbound::from_edge_list(k + 1, e);
}

}  // namespace fixtures
