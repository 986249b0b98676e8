// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace risecov {

double mod_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod(-tiny) + 2*pi can round up to 2*pi
    return r;
}

double wrap_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    } else if (r > kPi) {
        r -= kTwoPi;
    }
    return r;
}

namespace {

bool point_on_segment(Point2 p, Point2 a, Point2 b, double eps) {
    const Point2 ab = b - a;
    const Point2 ap = p - a;
    const double len = ab.norm();
    if (std::abs(ab.cross(ap)) > eps * std::max(len, 1.0)) return false;
    const double t = ap.dot(ab);
    return t >= -eps && t <= len * len + eps;
}

}  // namespace

Building::Building(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("building polygon needs at least 3 vertices");
    for (const Point2& v : vertices_) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("building vertex coordinates must be finite");
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        twice_area += a.cross(b);
        if (distance(a, b) < 1e-12)
            throw std::invalid_argument("building polygon has a degenerate edge");
    }
    if (twice_area <= 0.0)
        throw std::invalid_argument("building polygon must be counter-clockwise");

    // simplicity: non-adjacent edges must not touch
    auto orient = [](Point2 a, Point2 b, Point2 c) {
        const double v = (b - a).cross(c - a);
        if (std::abs(v) < 1e-12) return 0;
        return v > 0 ? 1 : -1;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
            const Point2 c = vertices_[j], d = vertices_[(j + 1) % n];
            const int o1 = orient(a, b, c), o2 = orient(a, b, d);
            const int o3 = orient(c, d, a), o4 = orient(c, d, b);
            bool hit = (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0);
            hit = hit || (o1 == 0 && point_on_segment(c, a, b, 1e-12)) ||
                  (o2 == 0 && point_on_segment(d, a, b, 1e-12)) ||
                  (o3 == 0 && point_on_segment(a, c, d, 1e-12)) ||
                  (o4 == 0 && point_on_segment(b, c, d, 1e-12));
            if (hit) throw std::invalid_argument("building polygon is self-intersecting");
        }
    }
}

bool Building::on_boundary(Point2 p, double eps) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, vertices_[i], vertices_[(i + 1) % n], eps)) return true;
    }
    return false;
}

bool Building::contains_strictly(Point2 p) const {
    if (on_boundary(p)) return false;
    // crossing-number with the half-open edge rule
    bool inside = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_int = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_int) inside = !inside;
        }
    }
    return inside;
}

namespace {

// Parameters t in [0,1] where the segment a+t*(b-a) crosses the polygon
// boundary, including both ends of any collinear overlap.
void collect_crossings(Point2 a, Point2 r, const Building& poly, std::vector<double>& ts) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    const double rlen = r.norm();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = v[i];
        const Point2 s = v[(i + 1) % n] - p;
        const Point2 w = p - a;
        const double den = r.cross(s);
        const double scale = std::max(rlen * s.norm(), 1e-300);
        if (std::abs(den) > 1e-12 * scale) {
            const double t = w.cross(s) / den;
            const double u = w.cross(r) / den;
            if (t >= -1e-12 && t <= 1.0 + 1e-12 && u >= -1e-12 && u <= 1.0 + 1e-12)
                ts.push_back(std::clamp(t, 0.0, 1.0));
        } else if (std::abs(w.cross(r)) <= 1e-9 * std::max(rlen, 1.0)) {
            // collinear edge: record the overlap interval ends
            const double rr = r.dot(r);
            const double tp = w.dot(r) / rr;
            const double tq = (w + s).dot(r) / rr;
            const double lo = std::min(tp, tq), hi = std::max(tp, tq);
            if (hi > 0.0 && lo < 1.0) {
                ts.push_back(std::clamp(lo, 0.0, 1.0));
                ts.push_back(std::clamp(hi, 0.0, 1.0));
            }
        }
    }
}

}  // namespace

bool los_blocked(Point2 a, Point2 b, std::span<const Building> buildings,
                 std::span<const std::size_t> skip) {
    if (a == b) throw std::invalid_argument("los_blocked: endpoints must differ");
    const Point2 r = b - a;
    std::vector<double> ts;
    for (std::size_t bi = 0; bi < buildings.size(); ++bi) {
        if (std::find(skip.begin(), skip.end(), bi) != skip.end()) continue;
        const Building& poly = buildings[bi];
        ts.clear();
        ts.push_back(0.0);
        ts.push_back(1.0);
        collect_crossings(a, r, poly, ts);
        std::sort(ts.begin(), ts.end());
        // classify the midpoint of each sub-interval; grazing midpoints lie
        // on the boundary and count as outside
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            if (ts[i + 1] - ts[i] < 1e-12) continue;
            const double tm = 0.5 * (ts[i] + ts[i + 1]);
            if (poly.contains_strictly(a + r * tm)) return true;
        }
    }
    return false;
}

bool los_blocked(Point2 a, Point2 b, std::span<const Building> buildings) {
    return los_blocked(a, b, buildings, {});
}

LocalAngles local_angles(const StructurePose& pose, Point2 external_point) {
    const Point2 v = external_point - pose.position;
    if (v.x == 0.0 && v.y == 0.0)
        throw std::invalid_argument("local_angles: point coincides with the structure position");
    const double delta = wrap_pi(azimuth(v) - pose.normal_azimuth);
    return {std::abs(delta), delta >= 0.0 ? 0.0 : kPi};
}

std::pair<std::size_t, std::size_t> grid_size(const GridRegion& region) {
    if (!(region.resolution > 0.0))
        throw std::invalid_argument("grid resolution must be positive");
    const double w = region.max.x - region.min.x;
    const double h = region.max.y - region.min.y;
    if (!(w > 0.0) || !(h > 0.0))
        throw std::invalid_argument("grid region must be non-degenerate");
    return {static_cast<std::size_t>(std::ceil(w / region.resolution)),
            static_cast<std::size_t>(std::ceil(h / region.resolution))};
}

std::vector<Point2> grid_points(const GridRegion& region) {
    const auto [nx, ny] = grid_size(region);
    std::vector<Point2> pts;
    pts.reserve(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            pts.push_back({region.min.x + (ix + 0.5) * region.resolution,
                           region.min.y + (iy + 0.5) * region.resolution});
        }
    }
    return pts;
}

}  // namespace risecov
