#pragma once

#include <numeric>
#include <vector>

#include "pp/coloring.hpp"
#include "pp/graph.hpp"
#include "pp/rng.hpp"

namespace pp::test {

// Erdos-Renyi graph on n vertices with edge probability p (per mille).
inline CouplingGraph random_graph(int n, int p_permille, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b)
            if (rng.bounded(1000) < static_cast<std::uint64_t>(p_permille))
                edges.emplace_back(a, b);
    return CouplingGraph(n, std::move(edges));
}

inline PriorityAssignment random_priority(int n, std::uint64_t seed) {
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Rng rng(seed);
    for (std::size_t i = perm.size() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.bounded(i + 1)]);
    PriorityAssignment p;
    for (int rank = 0; rank < n; ++rank) p.priority[perm[static_cast<std::size_t>(rank)]] = rank + 1;
    return p;
}

inline CouplingGraph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return CouplingGraph(n, std::move(edges));
}

inline CouplingGraph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
    return CouplingGraph(n, std::move(edges));
}

inline CouplingGraph cycle_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return CouplingGraph(n, std::move(edges));
}

// Longest directed path (in vertices) by exhaustive DFS; oracle for
// compute_levels on small graphs.
inline int brute_force_longest_path(const CouplingDag& d) {
    int best = 0;
    std::vector<VertexId> stack;
    auto dfs = [&](auto&& self, VertexId v, int depth) -> void {
        best = std::max(best, depth);
        for (VertexId s : d.successors(v)) self(self, s, depth + 1);
    };
    for (VertexId v = 1; v <= d.n_vertices(); ++v) dfs(dfs, v, 1);
    return best;
}

} // namespace pp::test
