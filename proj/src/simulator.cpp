#include "pp/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>

#include "pp/errors.hpp"
#include "pp/rng.hpp"

namespace pp {

namespace {

// seed derivation components
constexpr std::uint64_t kComponentPlanner = 1;
constexpr std::uint64_t kComponentUnconstrained = 2;
constexpr std::uint64_t kComponentRandomPriority = 3;

bool poses_equal(const std::vector<VehicleState>& a, const std::vector<VehicleState>& b) {
    if (a.size() != b.size()) return false;
    return a.empty() ||
           std::memcmp(a.data(), b.data(), a.size() * sizeof(VehicleState)) == 0;
}

double median_of(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n % 2 == 1) return xs[n / 2];
    return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

Duration lower_median(std::vector<Duration> xs) {
    if (xs.empty()) return Duration{};
    std::sort(xs.begin(), xs.end());
    return xs[(xs.size() - 1) / 2];
}

} // namespace

CouplingGraph build_coupling(const std::vector<VehicleState>& states,
                             const MotionPrimitiveAutomaton& mpa, int horizon) {
    const double radius = mpa.max_step_displacement() * horizon +
                          mpa.config().vehicle.circumradius();
    const int n = static_cast<int>(states.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = std::hypot(states[static_cast<std::size_t>(i)].x -
                                            states[static_cast<std::size_t>(j)].x,
                                        states[static_cast<std::size_t>(i)].y -
                                            states[static_cast<std::size_t>(j)].y);
            if (d <= 2.0 * radius) edges.emplace_back(i + 1, j + 1);
        }
    }
    return CouplingGraph(n, std::move(edges));
}

Simulator::Simulator(Scenario scenario)
    : scenario_(std::move(scenario)), mpa_(build_mpa(scenario_.mpa)) {
    if (scenario_.vehicles.empty()) throw InputError("scenario needs at least one vehicle");
    for (std::size_t i = 0; i < scenario_.vehicles.size(); ++i) {
        const VehicleSpec& v = scenario_.vehicles[i];
        if (v.id != static_cast<int>(i) + 1)
            throw InputError("vehicle ids must be dense and ascending from 1");
        paths_.emplace_back(v.reference_path);
        states_.push_back(v.start);
        mpa_states_.push_back(mpa_.match_state(v.start.speed, v.start_steering));
        last_predictions_.emplace_back();
    }
}

Prediction Simulator::fallback_prediction(int agent_idx, const ReferenceTrajectory& ref) const {
    // Decelerate to standstill holding the current steering level, then stand
    // still. Structurally feasible by construction of the automaton.
    Prediction out;
    VehicleState pose = states_[static_cast<std::size_t>(agent_idx)];
    int state = mpa_states_[static_cast<std::size_t>(agent_idx)];
    for (int d = 0; d < scenario_.horizon; ++d) {
        const int steer_idx = mpa_.states()[static_cast<std::size_t>(state)].steer_idx;
        int chosen = -1;
        double slowest = std::numeric_limits<double>::infinity();
        for (int idx : mpa_.transitions_from(state)) {
            const MotionPrimitive& prim = mpa_.primitives()[static_cast<std::size_t>(idx)];
            if (mpa_.states()[static_cast<std::size_t>(prim.to_state)].steer_idx != steer_idx)
                continue;
            const double v = mpa_.speed_of(prim.to_state);
            if (v < slowest) {
                slowest = v;
                chosen = idx;
            }
        }
        const MotionPrimitive& prim = mpa_.primitives()[static_cast<std::size_t>(chosen)];
        out.occupancies.push_back(mpa_.swept_occupancy(pose, prim));
        pose = mpa_.apply(pose, prim);
        out.poses.push_back(pose);
        out.primitive_sequence.push_back(chosen);
        state = prim.to_state;
        out.final_state = state;
    }
    out.cost = trajectory_cost(out.poses, ref, scenario_.speed_weight);
    return out;
}

StepRecord Simulator::run_step() {
    const int n = static_cast<int>(scenario_.vehicles.size());
    const int horizon = scenario_.horizon;

    CouplingGraph graph = build_coupling(states_, mpa_, horizon);

    // Unconstrained first plans for the constraint-based heuristic: a coupled
    // pair counts as a potential collision when their unconstrained
    // predictions overlap at any horizon step.
    std::map<VertexId, int> collision_counts;
    if (scenario_.strategy.kind == StrategyKind::ConstraintBased) {
        std::vector<Prediction> unconstrained;
        std::vector<std::vector<ConvexPolygon>> boundary_obstacles(
            static_cast<std::size_t>(horizon), scenario_.boundaries);
        for (int i = 0; i < n; ++i) {
            PlannerConfig cfg{horizon, scenario_.n_exp, scenario_.dt,
                              derive_seed(scenario_.seed, kComponentUnconstrained,
                                          static_cast<std::uint64_t>(step_),
                                          static_cast<std::uint64_t>(i)),
                              scenario_.speed_weight};
            const ReferenceTrajectory ref = paths_[static_cast<std::size_t>(i)].reference_from(
                {states_[static_cast<std::size_t>(i)].x, states_[static_cast<std::size_t>(i)].y},
                scenario_.vehicles[static_cast<std::size_t>(i)].reference_speed, scenario_.dt,
                horizon);
            try {
                unconstrained.push_back(plan(states_[static_cast<std::size_t>(i)],
                                             mpa_states_[static_cast<std::size_t>(i)], ref,
                                             boundary_obstacles, mpa_, cfg));
            } catch (const PlannerInfeasible&) {
                unconstrained.push_back(fallback_prediction(i, ref));
            }
        }
        for (VertexId i = 1; i <= n; ++i) collision_counts[i] = 0;
        for (const auto& [a, b] : graph.edges()) {
            bool overlap = false;
            for (int l = 0; l < horizon && !overlap; ++l)
                overlap = polygons_intersect(
                    unconstrained[static_cast<std::size_t>(a - 1)].occupancies[static_cast<std::size_t>(l)],
                    unconstrained[static_cast<std::size_t>(b - 1)].occupancies[static_cast<std::size_t>(l)]);
            if (overlap) {
                ++collision_counts[a];
                ++collision_counts[b];
            }
        }
    }

    PrioritizationStrategy strategy = scenario_.strategy;
    if (strategy.kind == StrategyKind::Random)
        strategy.seed = derive_seed(scenario_.seed, kComponentRandomPriority,
                                    static_cast<std::uint64_t>(step_));

    PriorityAssignment priorities = prioritize(
        strategy, graph,
        strategy.kind == StrategyKind::ConstraintBased ? &collision_counts : nullptr);
    CouplingDag dag = orient_edges(graph, priorities);
    LevelAssignment levels = compute_levels(dag);

    // agents grouped by level; within a level in id order
    std::vector<std::vector<int>> by_level(static_cast<std::size_t>(levels.n_levels));
    for (VertexId i = 1; i <= n; ++i)
        by_level[static_cast<std::size_t>(levels.level.at(i) - 1)].push_back(i - 1);

    std::vector<Prediction> predictions(static_cast<std::size_t>(n));
    std::vector<std::map<int, Prediction>> received(static_cast<std::size_t>(n));
    std::vector<AgentStepRecord> agent_records(static_cast<std::size_t>(n));
    std::map<VertexId, Duration> measured_planning;

    for (const auto& level_agents : by_level) {
        for (int idx : level_agents) {
            const VertexId id = idx + 1;
            const ReferenceTrajectory ref = paths_[static_cast<std::size_t>(idx)].reference_from(
                {states_[static_cast<std::size_t>(idx)].x, states_[static_cast<std::size_t>(idx)].y},
                scenario_.vehicles[static_cast<std::size_t>(idx)].reference_speed, scenario_.dt,
                horizon);

            // obstacles: boundaries plus predecessor occupancies per step
            std::vector<std::vector<ConvexPolygon>> obstacles(static_cast<std::size_t>(horizon),
                                                              scenario_.boundaries);
            for (VertexId j : dag.predecessors(id)) {
                received[static_cast<std::size_t>(idx)][j - 1] =
                    predictions[static_cast<std::size_t>(j - 1)]; // communicated copy
                for (int l = 0; l < horizon; ++l)
                    obstacles[static_cast<std::size_t>(l)].push_back(
                        predictions[static_cast<std::size_t>(j - 1)]
                            .occupancies[static_cast<std::size_t>(l)]);
            }

            PlannerConfig cfg{horizon, scenario_.n_exp, scenario_.dt,
                              derive_seed(scenario_.seed, kComponentPlanner,
                                          static_cast<std::uint64_t>(step_),
                                          static_cast<std::uint64_t>(idx)),
                              scenario_.speed_weight};

            AgentStepRecord& rec = agent_records[static_cast<std::size_t>(idx)];
            rec.agent = id;
            rec.priority = priorities.priority.at(id);
            rec.level = levels.level.at(id);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                predictions[static_cast<std::size_t>(idx)] =
                    plan(states_[static_cast<std::size_t>(idx)],
                         mpa_states_[static_cast<std::size_t>(idx)], ref, obstacles, mpa_, cfg);
            } catch (const PlannerInfeasible&) {
                predictions[static_cast<std::size_t>(idx)] = fallback_prediction(idx, ref);
                rec.infeasible = true;
            }
            const auto t1 = std::chrono::steady_clock::now();
            rec.solve_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rec.cost = predictions[static_cast<std::size_t>(idx)].cost;
            measured_planning[id] = Duration::from_ms(rec.solve_ms);
        }
    }

    // Prediction consistency: every stored copy of a neighbor's prediction equals that
    // neighbor's own prediction. Sequential PP guarantees this; verify anyway.
    bool consistent = true;
    for (int i = 0; i < n; ++i)
        for (const auto& [j, copy] : received[static_cast<std::size_t>(i)])
            consistent = consistent &&
                         poses_equal(copy.poses, predictions[static_cast<std::size_t>(j)].poses);
    if (!consistent)
        throw ContractError("prediction consistency violated in sequential planning");

    TimingModel modeled_model = TimingModel::uniform(
        n, Duration::from_ms(scenario_.planning_time_ms),
        Duration::from_ms(scenario_.prioritization_time_ms));
    TimingModel measured_model;
    measured_model.planning_time = std::move(measured_planning);
    measured_model.prioritization_time = modeled_model.prioritization_time;

    StepRecord record{step_,
                      std::move(graph),
                      std::move(priorities),
                      dag,
                      std::move(levels),
                      std::move(agent_records),
                      instance_time(dag, modeled_model),
                      instance_time(dag, measured_model),
                      consistent,
                      0.0,
                      0,
                      0};
    for (const AgentStepRecord& rec : record.agents) {
        record.step_cost += rec.cost;
        if (rec.infeasible) ++record.n_infeasible;
    }

    // apply each agent's first input
    for (int i = 0; i < n; ++i) {
        const Prediction& p = predictions[static_cast<std::size_t>(i)];
        states_[static_cast<std::size_t>(i)] = p.poses.front();
        mpa_states_[static_cast<std::size_t>(i)] =
            mpa_.primitives()[static_cast<std::size_t>(p.primitive_sequence.front())].to_state;
        last_predictions_[static_cast<std::size_t>(i)] = p;
    }

    // executed collision audit over the applied states
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (polygons_intersect(
                    footprint(states_[static_cast<std::size_t>(i)], scenario_.mpa.vehicle),
                    footprint(states_[static_cast<std::size_t>(j)], scenario_.mpa.vehicle)))
                ++record.executed_collisions;

    ++step_;
    return record;
}

ExperimentResult Simulator::run_experiment(const Scenario& scenario) {
    Simulator sim(scenario);
    ExperimentResult out;
    std::vector<double> level_counts;
    std::vector<Duration> modeled;
    std::vector<double> measured;
    for (int k = 0; k < scenario.n_steps; ++k) {
        out.records.push_back(sim.run_step());
        const StepRecord& rec = out.records.back();
        out.summary.total_cost += rec.step_cost;
        out.summary.max_levels = std::max(out.summary.max_levels, rec.levels.n_levels);
        level_counts.push_back(rec.levels.n_levels);
        modeled.push_back(rec.modeled.total);
        measured.push_back(rec.measured.total.ms());
        if (rec.modeled.total > out.summary.max_tncs_modeled)
            out.summary.max_tncs_modeled = rec.modeled.total;
        out.summary.max_tncs_measured_ms =
            std::max(out.summary.max_tncs_measured_ms, rec.measured.total.ms());
        out.summary.infeasible_total += rec.n_infeasible;
        out.summary.executed_collisions += rec.executed_collisions;
        out.summary.all_consistent = out.summary.all_consistent && rec.consistent;
    }
    out.summary.median_levels = median_of(level_counts);
    out.summary.median_tncs_modeled = lower_median(modeled);
    out.summary.median_tncs_measured_ms = median_of(measured);
    for (std::size_t i = 0; i < scenario.vehicles.size(); ++i) {
        const Vec2 goal = scenario.vehicles[i].reference_path.back();
        out.summary.final_distance_to_goal.push_back(
            distance({sim.states()[i].x, sim.states()[i].y}, goal));
    }
    return out;
}

} // namespace pp
