#pragma once

#include "pp/geometry.hpp"

namespace pp {

struct VehicleState {
    double x = 0.0;     // m
    double y = 0.0;     // m
    double yaw = 0.0;   // rad, normalized to (-pi, pi]
    double speed = 0.0; // m/s
};

struct VehicleInput {
    double steering = 0.0;     // rad
    double acceleration = 0.0; // m/s^2
};

struct VehicleParams {
    double wheelbase = 0.15;      // m
    double max_speed = 0.7;       // m/s
    double max_steering = 0.48;   // rad
    double max_acceleration = 2.0; // m/s^2
    double body_length = 0.22;    // m
    double body_width = 0.10;     // m

    double circumradius() const;
};

double normalize_angle(double a);

// Kinematic single-track model, one fixed-step RK4 update over dt.
VehicleState step_model(const VehicleState& s, const VehicleInput& u, double dt,
                        const VehicleParams& params);

ConvexPolygon footprint(const VehicleState& s, const VehicleParams& params);

} // namespace pp
