#include "pp/timing.hpp"

#include "pp/errors.hpp"

namespace pp {

TimingModel TimingModel::uniform(int n_vertices, Duration planning, Duration prioritization) {
    TimingModel t;
    for (VertexId i = 1; i <= n_vertices; ++i) {
        t.planning_time[i] = planning;
        t.prioritization_time[i] = prioritization;
    }
    return t;
}

InstanceTiming instance_time(const CouplingDag& d, const TimingModel& t) {
    for (VertexId i = 1; i <= d.n_vertices(); ++i) {
        if (!t.planning_time.contains(i) || !t.prioritization_time.contains(i))
            throw InputError("timing model is missing a vertex");
    }
    Duration max_prio;
    for (const auto& [i, dur] : t.prioritization_time)
        if (dur > max_prio) max_prio = dur;

    WeightedPath p = longest_weighted_path(d, t.planning_time);
    InstanceTiming out;
    out.critical_path = p.path;
    out.total = max_prio + p.total;
    out.n_levels = compute_levels(d).n_levels;
    return out;
}

std::vector<StrategyTiming> compare_strategies(
    const CouplingGraph& g, const std::vector<PrioritizationStrategy>& strategies,
    const TimingModel& t, const std::map<VertexId, int>* collision_counts) {
    std::vector<StrategyTiming> out;
    out.reserve(strategies.size());
    for (const auto& strategy : strategies) {
        PriorityAssignment p = prioritize(strategy, g, collision_counts);
        CouplingDag d = orient_edges(g, p);
        out.push_back({strategy, instance_time(d, t)});
    }
    return out;
}

} // namespace pp
