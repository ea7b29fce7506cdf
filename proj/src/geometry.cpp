#include "pp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pp/errors.hpp"

namespace pp {

double Vec2::norm() const { return std::hypot(x, y); }

double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

namespace {

// Projects polygon onto axis, returns [min, max].
std::pair<double, double> project(const ConvexPolygon& p, const Vec2& axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Vec2& v : p.points) {
        double d = v.dot(axis);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

bool separated_by_edges_of(const ConvexPolygon& a, const ConvexPolygon& b) {
    const std::size_t n = a.points.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 edge = a.points[(i + 1) % n] - a.points[i];
        Vec2 axis{-edge.y, edge.x};
        auto [alo, ahi] = project(a, axis);
        auto [blo, bhi] = project(b, axis);
        if (ahi < blo || bhi < alo) return true;
    }
    return false;
}

} // namespace

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.points.size() < 3 || b.points.size() < 3)
        throw InputError("polygons need at least 3 vertices");
    return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

ConvexPolygon convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
                 points.end());
    const std::size_t n = points.size();
    if (n < 3) throw InputError("convex hull needs at least 3 distinct points");

    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && (hull[k - 1] - hull[k - 2]).cross(points[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i > 0; --i) { // upper
        while (k >= t && (hull[k - 1] - hull[k - 2]).cross(points[i - 1] - hull[k - 2]) <= 0) --k;
        hull[k++] = points[i - 1];
    }
    hull.resize(k - 1);
    return ConvexPolygon{std::move(hull)};
}

ConvexPolygon oriented_rectangle(double x, double y, double yaw, double length, double width) {
    const double c = std::cos(yaw);
    const double s = std::sin(yaw);
    const double hl = 0.5 * length;
    const double hw = 0.5 * width;
    ConvexPolygon p;
    p.points = {
        {x + c * hl - s * hw, y + s * hl + c * hw},
        {x - c * hl - s * hw, y - s * hl + c * hw},
        {x - c * hl + s * hw, y - s * hl - c * hw},
        {x + c * hl + s * hw, y + s * hl - c * hw},
    };
    return p;
}

} // namespace pp
