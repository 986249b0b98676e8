// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace risecov {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wrap an angle to [0, 2*pi).
double mod_two_pi(double x);

/// Wrap an angle to (-pi, pi].
double wrap_pi(double x);

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2 operator+(Point2 r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(Point2 r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    constexpr double dot(Point2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Point2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    bool operator==(const Point2&) const = default;
};

inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }

/// Angle of the vector v in the global frame, in (-pi, pi].
inline double azimuth(Point2 v) { return std::atan2(v.y, v.x); }

/// Propagation direction relative to a panel's local frame.
///
/// theta is the unsigned angle from the panel normal, in [0, pi]. The
/// simulation plane is horizontal, so the in-plane azimuth phi collapses
/// to exactly 0 (positive local-x side, normal_azimuth + pi/2) or pi.
struct LocalAngles {
    double theta = 0.0;
    double phi = 0.0;
    bool operator==(const LocalAngles&) const = default;
};

/// Per-point propagation geometry of a BS -> structure -> UE link.
struct LinkGeometry {
    double d1 = 0.0;  ///< BS to structure, meters
    double d2 = 0.0;  ///< structure to UE, meters
    LocalAngles incident;
    LocalAngles scattered;
    bool bs_visible = true;
    bool user_visible = true;
};

enum class StructureKind {
    SurfaceReflective,  ///< reflective panel on a wall plane
    EdgeTransmissive,   ///< transmissive panel on a building edge
    EdgeDee,            ///< diffraction-enhancement edge structure
};

struct StructurePose {
    Point2 position;
    double normal_azimuth = 0.0;  ///< outward normal direction, [0, 2*pi)
    StructureKind kind = StructureKind::SurfaceReflective;
    bool operator==(const StructurePose&) const = default;
};

/// Simple polygon obstacle, counter-clockwise, >= 3 vertices.
/// The constructor validates and throws std::invalid_argument.
class Building {
  public:
    explicit Building(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }

    /// True if p lies strictly inside (boundary points are outside).
    bool contains_strictly(Point2 p) const;

    /// True if p lies on the polygon boundary within eps.
    bool on_boundary(Point2 p, double eps = 1e-9) const;

    bool operator==(const Building&) const = default;

  private:
    std::vector<Point2> vertices_;
};

/// True iff the open segment (a,b) intersects the interior of any building.
/// Grazing along a face or through a corner does not block.
bool los_blocked(Point2 a, Point2 b, std::span<const Building> buildings);

/// Same, ignoring the buildings whose indices appear in skip (used for
/// structures mounted on a building boundary).
bool los_blocked(Point2 a, Point2 b, std::span<const Building> buildings,
                 std::span<const std::size_t> skip);

/// Local angles of an external point as seen from a structure pose.
/// Throws std::invalid_argument if the point coincides with the position.
LocalAngles local_angles(const StructurePose& pose, Point2 external_point);

/// Axis-aligned sampling region with a square cell size in meters.
struct GridRegion {
    Point2 min;
    Point2 max;
    double resolution = 1.0;
    bool operator==(const GridRegion&) const = default;
};

/// Cell counts (nx, ny) = (ceil(w/res), ceil(h/res)). Throws on a
/// non-positive resolution or degenerate region.
std::pair<std::size_t, std::size_t> grid_size(const GridRegion& region);

/// Row-major cell-center points: y rows ascending, x fastest. The first
/// point is (min.x + res/2, min.y + res/2).
std::vector<Point2> grid_points(const GridRegion& region);

}  // namespace risecov
