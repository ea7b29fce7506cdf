#include "pp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pp/errors.hpp"

namespace pp {

PathSampler::PathSampler(const std::vector<Vec2>& polyline) : points_(polyline) {
    if (points_.size() < 2) throw InputError("reference path needs at least 2 points");
    cumulative_.resize(points_.size());
    cumulative_[0] = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i)
        cumulative_[i] = cumulative_[i - 1] + distance(points_[i - 1], points_[i]);
    if (cumulative_.back() <= 0.0) throw InputError("reference path has zero length");
}

Vec2 PathSampler::point_at(double s) const {
    s = std::clamp(s, 0.0, length());
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
    if (i == 0) return points_[0];
    const double seg = cumulative_[i] - cumulative_[i - 1];
    const double t = seg > 0.0 ? (s - cumulative_[i - 1]) / seg : 0.0;
    return points_[i - 1] + (points_[i] - points_[i - 1]) * t;
}

double PathSampler::project(const Vec2& p) const {
    double best_dist = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const Vec2 a = points_[i - 1];
        const Vec2 d = points_[i] - a;
        const double len2 = d.dot(d);
        const double t = len2 > 0.0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
        const Vec2 q = a + d * t;
        const double dist = distance(p, q);
        if (dist < best_dist) {
            best_dist = dist;
            best_s = cumulative_[i - 1] + std::sqrt(len2) * t;
        }
    }
    return best_s;
}

ReferenceTrajectory PathSampler::reference_from(const Vec2& position, double speed, double dt,
                                                int horizon) const {
    const double s0 = project(position);
    ReferenceTrajectory ref;
    ref.reserve(static_cast<std::size_t>(horizon));
    for (int l = 1; l <= horizon; ++l) {
        const double s = s0 + speed * dt * l;
        if (s >= length())
            ref.push_back({point_at(length()), 0.0});
        else
            ref.push_back({point_at(s), speed});
    }
    return ref;
}

namespace {

constexpr double kCx = 2.25;
constexpr double kCy = 2.0;
constexpr double kInner = 0.17;  // straight-lane offset from the road center line
constexpr double kOuter = 0.45;  // turn-lane offset
constexpr double kTurnRadius = 0.3;
constexpr double kStraightIn = 1.5;  // straight vehicles start this far from the center
constexpr double kStraightOut = 0.9;
constexpr double kTurnIn = 1.35; // turning vehicles start and end this far from the center

Vec2 rotate_about_center(const Vec2& p, int quarter_turns) {
    const double dx = p.x - kCx;
    const double dy = p.y - kCy;
    switch (quarter_turns & 3) {
    case 0: return {kCx + dx, kCy + dy};
    case 1: return {kCx - dy, kCy + dx};
    case 2: return {kCx - dx, kCy - dy};
    default: return {kCx + dy, kCy - dx};
    }
}

// Eastbound templates; other directions are quarter-turn rotations.
std::vector<Vec2> straight_path_east() {
    return {{kCx - kStraightIn, kCy - kInner}, {kCx + kStraightOut, kCy - kInner}};
}

std::vector<Vec2> right_turn_path_east() {
    std::vector<Vec2> path;
    path.push_back({kCx - kTurnIn, kCy - kOuter});
    path.push_back({kCx - kOuter - kTurnRadius, kCy - kOuter});
    const Vec2 arc_center{kCx - kOuter - kTurnRadius, kCy - kOuter - kTurnRadius};
    const int arc_samples = 8;
    for (int i = 1; i <= arc_samples; ++i) {
        const double ang = M_PI / 2.0 * (1.0 - static_cast<double>(i) / arc_samples);
        path.push_back({arc_center.x + kTurnRadius * std::cos(ang),
                        arc_center.y + kTurnRadius * std::sin(ang)});
    }
    path.push_back({kCx - kOuter, kCy - kTurnIn});
    return path;
}

ConvexPolygon wall(double x0, double y0, double x1, double y1) {
    return ConvexPolygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

} // namespace

Scenario make_intersection_scenario() {
    Scenario sc;
    sc.name = "intersection8";
    sc.dt = 0.2;
    sc.n_steps = 25;
    sc.horizon = 8;
    sc.n_exp = 2500;
    sc.seed = 42;
    sc.strategy = PrioritizationStrategy::coloring();
    sc.planning_time_ms = 50.0;
    sc.prioritization_time_ms = 0.81;

    const double turn_steering = std::atan(0.15 / kTurnRadius); // matches the arc curvature
    sc.mpa.speed_levels = {0.0, 0.35, 0.7};
    sc.mpa.steering_levels = {-turn_steering, 0.0, turn_steering};
    sc.mpa.dt = sc.dt;
    sc.mpa.max_speed_change = 0.35;
    sc.mpa.max_steering_change = turn_steering + 0.01;
    sc.mpa.n_samples = 6;
    sc.mpa.vehicle = VehicleParams{};

    // map extent 4.5 m x 4.0 m, walls just outside it
    sc.boundaries = {
        wall(-0.1, -0.1, 4.6, 0.0),
        wall(-0.1, 4.0, 4.6, 4.1),
        wall(-0.1, 0.0, 0.0, 4.0),
        wall(4.5, 0.0, 4.6, 4.0),
    };

    // Ids run around the intersection so that consecutive ids are coupled at
    // the start; per direction, first the straight vehicle then the turner.
    const double ref_speed = 0.7;
    int id = 1;
    for (int q = 0; q < 4; ++q) {
        const double heading = normalize_angle(M_PI / 2.0 * q);
        for (bool straight : {true, false}) {
            VehicleSpec v;
            v.id = id++;
            std::vector<Vec2> base = straight ? straight_path_east() : right_turn_path_east();
            for (const Vec2& p : base) v.reference_path.push_back(rotate_about_center(p, q));
            v.start = {v.reference_path.front().x, v.reference_path.front().y, heading, ref_speed};
            v.start_steering = 0.0;
            v.reference_speed = ref_speed;
            sc.vehicles.push_back(std::move(v));
        }
    }
    return sc;
}

} // namespace pp
