#pragma once

#include <map>
#include <vector>

#include "pp/coloring.hpp"
#include "pp/graph.hpp"

namespace pp {

// Per-agent planning and prioritization times of one instance.
struct TimingModel {
    std::map<VertexId, Duration> planning_time;
    std::map<VertexId, Duration> prioritization_time;

    static TimingModel uniform(int n_vertices, Duration planning, Duration prioritization);
};

struct InstanceTiming {
    Duration total;                   // max prioritization time + planning along critical path
    std::vector<VertexId> critical_path;
    int n_levels = 0;
};

InstanceTiming instance_time(const CouplingDag& d, const TimingModel& t);

struct StrategyTiming {
    PrioritizationStrategy strategy;
    InstanceTiming timing;
};

// Orients g under each strategy and evaluates the timing model. The
// constraint-based strategy reads its collision counts from contexts.
std::vector<StrategyTiming> compare_strategies(
    const CouplingGraph& g, const std::vector<PrioritizationStrategy>& strategies,
    const TimingModel& t, const std::map<VertexId, int>* collision_counts = nullptr);

} // namespace pp
