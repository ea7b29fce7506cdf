#pragma once

#include <vector>

#include "pp/vehicle.hpp"

namespace pp {

// Automaton state: a (speed level, steering level) pair.
struct MpaState {
    int speed_idx = 0;
    int steer_idx = 0;
};

// One precomputed feasible trajectory segment over a single time step.
struct MotionPrimitive {
    int from_state = 0;
    int to_state = 0;
    VehicleInput input;                // constant over the step
    std::vector<VehicleState> samples; // local frame; samples.front() at the origin,
                                       // samples.back() the step endpoint
};

struct MpaConfig {
    std::vector<double> speed_levels;    // m/s, ascending
    std::vector<double> steering_levels; // rad, ascending
    double dt = 0.2;                     // s
    double max_speed_change = 0.35;      // m/s per step
    double max_steering_change = 0.48;   // rad per step
    int n_samples = 6;                   // poses per primitive, >= 5
    VehicleParams vehicle;
};

class MotionPrimitiveAutomaton {
public:
    explicit MotionPrimitiveAutomaton(MpaConfig cfg);

    const MpaConfig& config() const { return cfg_; }
    const std::vector<MpaState>& states() const { return states_; }
    const std::vector<MotionPrimitive>& primitives() const { return primitives_; }
    const std::vector<int>& transitions_from(int state) const;

    int state_index(int speed_idx, int steer_idx) const;
    // State whose levels match the given speed and steering within tolerance;
    // throws InputError when none does.
    int match_state(double speed, double steering, double tol = 1e-6) const;

    double speed_of(int state) const;
    double steering_of(int state) const;

    // Index of a primitive that keeps the automaton in `state`.
    int hold_primitive(int state) const;

    // Largest endpoint displacement of any primitive; the per-step term of the
    // reachable-set disc overapproximation.
    double max_step_displacement() const { return max_step_displacement_; }

    // Applies a primitive to a world pose: the endpoint state and the swept
    // occupancy (convex hull of the footprints at the step endpoints).
    VehicleState apply(const VehicleState& pose, const MotionPrimitive& prim) const;
    ConvexPolygon swept_occupancy(const VehicleState& pose, const MotionPrimitive& prim) const;

private:
    MpaConfig cfg_;
    std::vector<MpaState> states_;
    std::vector<MotionPrimitive> primitives_;
    std::vector<std::vector<int>> transitions_; // per from-state
    double max_step_displacement_ = 0.0;
};

MotionPrimitiveAutomaton build_mpa(const MpaConfig& cfg);

} // namespace pp
