#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pp/coloring.hpp"
#include "pp/mpa.hpp"
#include "pp/planner.hpp"

namespace pp {

struct VehicleSpec {
    int id = 0; // 1-based, unique
    VehicleState start;
    double start_steering = 0.0;
    std::vector<Vec2> reference_path; // polyline, arc-length parameterized on load
    double reference_speed = 0.0;     // m/s
};

struct Scenario {
    std::string name;
    double dt = 0.2;
    int n_steps = 25;
    int horizon = 8;
    int n_exp = 2500;
    std::uint64_t seed = 0;
    PrioritizationStrategy strategy = PrioritizationStrategy::coloring();
    double planning_time_ms = 50.0;       // modeled T_c per agent
    double prioritization_time_ms = 0.81; // modeled T_prio per agent
    double speed_weight = 0.1;
    MpaConfig mpa;
    std::vector<ConvexPolygon> boundaries;
    std::vector<VehicleSpec> vehicles;
};

// Arc-length lookup over a polyline.
class PathSampler {
public:
    explicit PathSampler(const std::vector<Vec2>& polyline);

    double length() const { return cumulative_.back(); }
    Vec2 point_at(double s) const;          // clamped to [0, length]
    double project(const Vec2& p) const;    // arc length of the closest point

    // Reference for the next `horizon` steps from the projection of `position`,
    // advancing by speed * dt per step; clamped points carry reference speed 0.
    ReferenceTrajectory reference_from(const Vec2& position, double speed, double dt,
                                       int horizon) const;

private:
    std::vector<Vec2> points_;
    std::vector<double> cumulative_;
};

// Eight-vehicle two-lane-per-direction intersection: from each direction one
// vehicle drives straight and one turns right. Map extent 4.5 m x 4.0 m.
Scenario make_intersection_scenario();

} // namespace pp
