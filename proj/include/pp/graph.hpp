#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pp/duration.hpp"

namespace pp {

using VertexId = int; // dense ids 1..n

// Undirected agent interaction graph. Immutable after construction.
class CouplingGraph {
public:
    CouplingGraph(int n_vertices, std::vector<std::pair<VertexId, VertexId>> edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    bool has_vertex(VertexId i) const { return i >= 1 && i <= n_; }

    // Edges as unordered pairs stored with smaller id first, sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    // Neighbors of i, ascending.
    const std::vector<VertexId>& neighbors(VertexId i) const;

    int max_degree() const;

    bool operator==(const CouplingGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adjacency_; // index 0 unused
};

// Orientation of a CouplingGraph's edges. Construction does not require
// acyclicity; is_acyclic and compute_levels report on it.
class CouplingDag {
public:
    CouplingDag(int n_vertices, std::vector<std::pair<VertexId, VertexId>> arcs);

    int n_vertices() const { return n_; }
    bool has_vertex(VertexId i) const { return i >= 1 && i <= n_; }

    const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }
    const std::vector<VertexId>& successors(VertexId i) const;
    const std::vector<VertexId>& predecessors(VertexId i) const;

    int in_degree(VertexId i) const { return static_cast<int>(predecessors(i).size()); }
    int out_degree(VertexId i) const { return static_cast<int>(successors(i).size()); }

private:
    int n_;
    std::vector<std::pair<VertexId, VertexId>> arcs_;
    std::vector<std::vector<VertexId>> successors_;
    std::vector<std::vector<VertexId>> predecessors_;
};

struct LevelAssignment {
    std::map<VertexId, int> level; // 1-based computation level per vertex
    int n_levels = 0;
};

// Number of neighbors of i in g.
int degree(const CouplingGraph& g, VertexId i);

// (sources, sinks) of an acyclic dag; throws ContractError on a cycle.
std::pair<std::vector<VertexId>, std::vector<VertexId>> sources_sinks(const CouplingDag& d);

bool is_acyclic(const CouplingDag& d);

// Topological order of an acyclic dag (Kahn); throws ContractError on a cycle.
std::vector<VertexId> topological_order(const CouplingDag& d);

// level(i) = 1 for sources, otherwise 1 + max level over predecessors.
LevelAssignment compute_levels(const CouplingDag& d);

struct WeightedPath {
    std::vector<VertexId> path; // source-to-sink, lexicographically smallest among maxima
    Duration total;
};

// Source-to-sink path maximizing the sum of vertex weights.
WeightedPath longest_weighted_path(const CouplingDag& d,
                                   const std::map<VertexId, Duration>& weight);

} // namespace pp
