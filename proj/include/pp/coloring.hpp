#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "pp/graph.hpp"

namespace pp {

struct Coloring {
    std::map<VertexId, int> color; // colors 1..n_colors
    int n_colors = 0;
};

struct PriorityAssignment {
    std::map<VertexId, int> priority; // smaller value = higher priority
};

enum class StrategyKind { Constant, Random, ConstraintBased, Coloring };

struct PrioritizationStrategy {
    StrategyKind kind = StrategyKind::Constant;
    std::uint64_t seed = 0; // used by Random only

    static PrioritizationStrategy constant() { return {StrategyKind::Constant, 0}; }
    static PrioritizationStrategy random(std::uint64_t seed) { return {StrategyKind::Random, seed}; }
    static PrioritizationStrategy constraint_based() { return {StrategyKind::ConstraintBased, 0}; }
    static PrioritizationStrategy coloring() { return {StrategyKind::Coloring, 0}; }
};

const char* strategy_name(StrategyKind kind);
std::optional<StrategyKind> strategy_from_name(const std::string& name);

// Greedy coloring with SDO ordering, ties broken by larger degree, remaining
// ties by smallest vertex id. A pure function of g, so independent executions
// agree on the result.
Coloring greedy_color(const CouplingGraph& g);

// True iff no edge connects two equally colored vertices and the colors used
// are exactly {1..n_colors}.
bool is_valid_coloring(const CouplingGraph& g, const Coloring& c);

// Exact chromatic number by backtracking; n_vertices <= 12.
int chromatic_number_bruteforce(const CouplingGraph& g);

// Priorities ascend with color; within a color class, by vertex id.
// The result is a permutation of 1..n.
PriorityAssignment color_to_priority(const Coloring& c);

// Directed edge (i, j) for every edge {i, j} with priority(i) < priority(j).
CouplingDag orient_edges(const CouplingGraph& g, const PriorityAssignment& p);

// Renumbers color classes: descending max vertex degree, ties by descending
// degree sum, ties by ascending original color. Classes themselves unchanged.
Coloring reorder_levels(const Coloring& c, const CouplingGraph& g);

// collision_counts is required for the constraint-based strategy.
PriorityAssignment prioritize(const PrioritizationStrategy& strategy, const CouplingGraph& g,
                              const std::map<VertexId, int>* collision_counts = nullptr);

// Levels histogram over all n! prioritizations; n_vertices <= 9.
std::map<int, std::uint64_t> enumerate_prioritizations(const CouplingGraph& g);

// Minimum achievable number of computation levels, equal to the chromatic
// number; n_vertices <= 12.
int min_levels(const CouplingGraph& g);

} // namespace pp
