#include "pp/mpa.hpp"

#include <algorithm>
#include <cmath>

#include "pp/errors.hpp"

namespace pp {

MotionPrimitiveAutomaton::MotionPrimitiveAutomaton(MpaConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.speed_levels.empty() || cfg_.steering_levels.empty())
        throw InputError("MPA needs at least one speed and one steering level");
    if (cfg_.dt <= 0.0) throw InputError("MPA time step must be positive");
    if (cfg_.n_samples < 5) throw InputError("MPA primitives need at least 5 samples");
    if (!std::is_sorted(cfg_.speed_levels.begin(), cfg_.speed_levels.end()) ||
        !std::is_sorted(cfg_.steering_levels.begin(), cfg_.steering_levels.end()))
        throw InputError("MPA levels must be ascending");
    for (double v : cfg_.speed_levels)
        if (v < 0.0 || v > cfg_.vehicle.max_speed + 1e-9)
            throw InputError("speed level outside state bounds");
    for (double d : cfg_.steering_levels)
        if (std::abs(d) > cfg_.vehicle.max_steering + 1e-9)
            throw InputError("steering level outside input bounds");
    if (cfg_.max_speed_change / cfg_.dt > cfg_.vehicle.max_acceleration + 1e-9)
        throw InputError("speed change limit exceeds the acceleration bound");

    const int nv = static_cast<int>(cfg_.speed_levels.size());
    const int nd = static_cast<int>(cfg_.steering_levels.size());
    for (int vi = 0; vi < nv; ++vi)
        for (int di = 0; di < nd; ++di) states_.push_back({vi, di});
    transitions_.assign(states_.size(), {});

    for (std::size_t from = 0; from < states_.size(); ++from) {
        const double v0 = cfg_.speed_levels[static_cast<std::size_t>(states_[from].speed_idx)];
        const double d0 = cfg_.steering_levels[static_cast<std::size_t>(states_[from].steer_idx)];
        for (std::size_t to = 0; to < states_.size(); ++to) {
            const double v1 = cfg_.speed_levels[static_cast<std::size_t>(states_[to].speed_idx)];
            const double d1 = cfg_.steering_levels[static_cast<std::size_t>(states_[to].steer_idx)];
            if (std::abs(v1 - v0) > cfg_.max_speed_change + 1e-9) continue;
            if (std::abs(d1 - d0) > cfg_.max_steering_change + 1e-9) continue;

            MotionPrimitive prim;
            prim.from_state = static_cast<int>(from);
            prim.to_state = static_cast<int>(to);
            prim.input = {d1, (v1 - v0) / cfg_.dt};

            VehicleState origin{0.0, 0.0, 0.0, v0};
            prim.samples.reserve(static_cast<std::size_t>(cfg_.n_samples));
            prim.samples.push_back(origin);
            for (int k = 1; k < cfg_.n_samples; ++k) {
                const double h = cfg_.dt * k / (cfg_.n_samples - 1);
                prim.samples.push_back(step_model(origin, prim.input, h, cfg_.vehicle));
            }
            // snap the endpoint speed to the exact level
            prim.samples.back().speed = v1;

            max_step_displacement_ = std::max(
                max_step_displacement_, std::hypot(prim.samples.back().x, prim.samples.back().y));
            transitions_[from].push_back(static_cast<int>(primitives_.size()));
            primitives_.push_back(std::move(prim));
        }
    }
}

const std::vector<int>& MotionPrimitiveAutomaton::transitions_from(int state) const {
    return transitions_.at(static_cast<std::size_t>(state));
}

int MotionPrimitiveAutomaton::state_index(int speed_idx, int steer_idx) const {
    const int nd = static_cast<int>(cfg_.steering_levels.size());
    if (speed_idx < 0 || speed_idx >= static_cast<int>(cfg_.speed_levels.size()) ||
        steer_idx < 0 || steer_idx >= nd)
        throw InputError("automaton state index out of range");
    return speed_idx * nd + steer_idx;
}

int MotionPrimitiveAutomaton::match_state(double speed, double steering, double tol) const {
    for (std::size_t s = 0; s < states_.size(); ++s) {
        if (std::abs(speed_of(static_cast<int>(s)) - speed) <= tol &&
            std::abs(steering_of(static_cast<int>(s)) - steering) <= tol)
            return static_cast<int>(s);
    }
    throw InputError("vehicle state does not map to an automaton state");
}

double MotionPrimitiveAutomaton::speed_of(int state) const {
    return cfg_.speed_levels.at(
        static_cast<std::size_t>(states_.at(static_cast<std::size_t>(state)).speed_idx));
}

double MotionPrimitiveAutomaton::steering_of(int state) const {
    return cfg_.steering_levels.at(
        static_cast<std::size_t>(states_.at(static_cast<std::size_t>(state)).steer_idx));
}

int MotionPrimitiveAutomaton::hold_primitive(int state) const {
    for (int idx : transitions_from(state))
        if (primitives_[static_cast<std::size_t>(idx)].to_state == state) return idx;
    throw ContractError("automaton state without a hold transition");
}

VehicleState MotionPrimitiveAutomaton::apply(const VehicleState& pose,
                                             const MotionPrimitive& prim) const {
    const VehicleState& local = prim.samples.back();
    const double c = std::cos(pose.yaw);
    const double s = std::sin(pose.yaw);
    VehicleState out;
    out.x = pose.x + c * local.x - s * local.y;
    out.y = pose.y + s * local.x + c * local.y;
    out.yaw = normalize_angle(pose.yaw + local.yaw);
    out.speed = local.speed;
    return out;
}

ConvexPolygon MotionPrimitiveAutomaton::swept_occupancy(const VehicleState& pose,
                                                        const MotionPrimitive& prim) const {
    const double c = std::cos(pose.yaw);
    const double s = std::sin(pose.yaw);
    std::vector<Vec2> corners;
    for (const VehicleState* local : {&prim.samples.front(), &prim.samples.back()}) {
        VehicleState world;
        world.x = pose.x + c * local->x - s * local->y;
        world.y = pose.y + s * local->x + c * local->y;
        world.yaw = normalize_angle(pose.yaw + local->yaw);
        for (const Vec2& v : footprint(world, cfg_.vehicle).points) corners.push_back(v);
    }
    return convex_hull(std::move(corners));
}

MotionPrimitiveAutomaton build_mpa(const MpaConfig& cfg) {
    return MotionPrimitiveAutomaton(cfg);
}

} // namespace pp
