#pragma once

#include <optional>
#include <vector>

#include "pp/scenario.hpp"
#include "pp/timing.hpp"

namespace pp {

// Edge {i, j} iff the horizon reachable-set disc overapproximations of i and j
// intersect: disc radius = max primitive displacement per step * horizon +
// footprint circumradius.
CouplingGraph build_coupling(const std::vector<VehicleState>& states,
                             const MotionPrimitiveAutomaton& mpa, int horizon);

struct AgentStepRecord {
    int agent = 0;
    int priority = 0;
    int level = 0;
    double cost = 0.0;
    double solve_ms = 0.0;
    bool infeasible = false;
};

struct StepRecord {
    int step = 0;
    CouplingGraph graph;
    PriorityAssignment priorities;
    CouplingDag dag;
    LevelAssignment levels;
    std::vector<AgentStepRecord> agents;
    InstanceTiming modeled;
    InstanceTiming measured;
    bool consistent = false;
    double step_cost = 0.0;
    int n_infeasible = 0;
    int executed_collisions = 0; // pairwise footprint overlaps after applying inputs
};

struct ExperimentSummary {
    double total_cost = 0.0;
    int max_levels = 0;
    double median_levels = 0.0;
    Duration max_tncs_modeled;
    Duration median_tncs_modeled; // lower median
    double max_tncs_measured_ms = 0.0;
    double median_tncs_measured_ms = 0.0;
    int infeasible_total = 0;
    int executed_collisions = 0;
    bool all_consistent = true;
    std::vector<double> final_distance_to_goal; // per vehicle, m
};

struct ExperimentResult {
    std::vector<StepRecord> records;
    ExperimentSummary summary;
};

// Closed-loop prioritized-planning simulation: per time step couple ->
// prioritize -> orient -> solve level by level with prediction exchange ->
// apply first input.
class Simulator {
public:
    explicit Simulator(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }
    const std::vector<VehicleState>& states() const { return states_; }
    int current_step() const { return step_; }

    // Predictions from the most recent step, indexed by agent.
    const std::vector<std::optional<Prediction>>& last_predictions() const {
        return last_predictions_;
    }

    StepRecord run_step();

    static ExperimentResult run_experiment(const Scenario& scenario);

private:
    Prediction fallback_prediction(int agent_idx, const ReferenceTrajectory& ref) const;

    Scenario scenario_;
    MotionPrimitiveAutomaton mpa_;
    std::vector<PathSampler> paths_;
    std::vector<VehicleState> states_;
    std::vector<int> mpa_states_;
    std::vector<std::optional<Prediction>> last_predictions_;
    int step_ = 0;
};

} // namespace pp
