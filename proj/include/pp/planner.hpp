#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pp/mpa.hpp"

namespace pp {

struct ReferencePoint {
    Vec2 position;
    double speed = 0.0;
};

using ReferenceTrajectory = std::vector<ReferencePoint>; // one point per horizon step

struct PlannerConfig {
    int horizon = 8;         // H_p, steps
    int n_exp = 2500;        // expansion budget
    double dt = 0.2;         // s
    std::uint64_t seed = 0;
    double speed_weight = 0.1; // weight of squared speed deviation in the stage cost
};

struct Prediction {
    std::vector<VehicleState> poses;        // one per horizon step
    std::vector<ConvexPolygon> occupancies; // swept footprint per step
    double cost = 0.0;
    std::vector<int> primitive_sequence;    // indices into the MPA
    int final_state = 0;                    // automaton state after the last step
};

// Stage cost: squared planar distance to the reference point plus weighted
// squared speed deviation.
double stage_cost(const VehicleState& pose, const ReferencePoint& ref, double speed_weight);

// Cost of a pose sequence against a reference, summed per step.
double trajectory_cost(const std::vector<VehicleState>& poses, const ReferenceTrajectory& ref,
                       double speed_weight);

class PlannerInfeasible : public std::runtime_error {
public:
    PlannerInfeasible(std::string msg, Prediction deepest_prefix)
        : std::runtime_error(std::move(msg)), deepest_prefix(std::move(deepest_prefix)) {}

    Prediction deepest_prefix; // longest collision-free prefix found
};

// Random tree search over the motion-primitive automaton. obstacles[l] are the
// polygons the swept occupancy of step l+1 must avoid. Deterministic in
// (inputs, cfg.seed); larger budgets extend the same expansion stream, so the
// returned cost is non-increasing in cfg.n_exp.
Prediction plan(const VehicleState& state, int start_state, const ReferenceTrajectory& ref,
                const std::vector<std::vector<ConvexPolygon>>& obstacles,
                const MotionPrimitiveAutomaton& mpa, const PlannerConfig& cfg);

} // namespace pp
