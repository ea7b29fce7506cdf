#include "pp/vehicle.hpp"

#include <array>
#include <cmath>

#include "pp/errors.hpp"

namespace pp {

double VehicleParams::circumradius() const {
    return 0.5 * std::hypot(body_length, body_width);
}

double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

namespace {

using Deriv = std::array<double, 4>; // dx, dy, dyaw, dspeed

Deriv dynamics(const Deriv& state, const VehicleInput& u, const VehicleParams& p) {
    const double yaw = state[2];
    const double v = state[3];
    return {v * std::cos(yaw), v * std::sin(yaw), v / p.wheelbase * std::tan(u.steering),
            u.acceleration};
}

} // namespace

VehicleState step_model(const VehicleState& s, const VehicleInput& u, double dt,
                        const VehicleParams& params) {
    if (!(dt > 0.0)) throw InputError("integration step must be positive");
    if (std::abs(u.steering) > params.max_steering + 1e-9)
        throw InputError("steering input outside feasible set");
    if (std::abs(u.acceleration) > params.max_acceleration + 1e-9)
        throw InputError("acceleration input outside feasible set");

    Deriv y{s.x, s.y, s.yaw, s.speed};
    Deriv k1 = dynamics(y, u, params);
    Deriv y2, y3, y4;
    for (int i = 0; i < 4; ++i) y2[i] = y[i] + 0.5 * dt * k1[i];
    Deriv k2 = dynamics(y2, u, params);
    for (int i = 0; i < 4; ++i) y3[i] = y[i] + 0.5 * dt * k2[i];
    Deriv k3 = dynamics(y3, u, params);
    for (int i = 0; i < 4; ++i) y4[i] = y[i] + dt * k3[i];
    Deriv k4 = dynamics(y4, u, params);

    VehicleState out;
    out.x = y[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    out.y = y[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    out.yaw = normalize_angle(y[2] + dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]));
    out.speed = y[3] + dt / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
    return out;
}

ConvexPolygon footprint(const VehicleState& s, const VehicleParams& params) {
    return oriented_rectangle(s.x, s.y, s.yaw, params.body_length, params.body_width);
}

} // namespace pp
