// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Two-dimensional rate regions. Every region is the intersection of the
// nonnegative quadrant with halfspaces a*R1 + b*R2 <= c, a, b >= 0, so it is
// convex and down-closed; most operations rely on that.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mimoic {

struct Point {
    double r1 = 0.0;
    double r2 = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// a*R1 + b*R2 <= c. c may be +inf (never binds).
struct RateConstraint {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    friend bool operator==(const RateConstraint&, const RateConstraint&) = default;
};

/// Vertex dedup / feasibility tolerance, in bits.
inline constexpr double kVertexTol = 1e-9;

class RateRegion2D {
public:
    RateRegion2D() = default;

    const std::vector<RateConstraint>& constraints() const { return constraints_; }
    /// Counterclockwise, starting at the origin.
    const std::vector<Point>& vertices() const { return vertices_; }
    bool empty() const { return empty_; }

    /// Tightest finite c among constraints with direction (a, b); +inf if none.
    double bound(double a, double b) const;

    friend bool operator==(const RateRegion2D&, const RateRegion2D&) = default;

private:
    friend RateRegion2D region_from_constraints(std::vector<RateConstraint> cs);
    friend RateRegion2D region_from_parts(std::vector<RateConstraint> cs,
                                          std::vector<Point> vertices, bool empty);
    friend RateRegion2D hull_union(const RateRegion2D& r1, const RateRegion2D& r2);

    std::vector<RateConstraint> constraints_;
    std::vector<Point> vertices_{Point{}};
    bool empty_ = true;
};

/// Intersects the constraints with the nonnegative quadrant. A constraint
/// with finite c < -1e-9 makes the region empty (single vertex (0,0),
/// empty flag set). Throws Unbounded when R1 or R2 has no finite bound and
/// InvalidSpec for negative or non-finite direction coefficients.
RateRegion2D region_from_constraints(std::vector<RateConstraint> cs);

/// Rebuilds a region from stored parts (JSON input). Vertices are
/// recomputed from the constraints and must match the stored ones.
RateRegion2D region_from_parts(std::vector<RateConstraint> cs, std::vector<Point> vertices,
                               bool empty);

/// {(R1, R2) >= 0 : (R1 + gx, R2 + gy) in r}.
RateRegion2D erode_by_box(const RateRegion2D& r, double gx, double gy);

/// Convex hull of r1 union r2, with constraints re-derived from hull edges.
RateRegion2D hull_union(const RateRegion2D& r1, const RateRegion2D& r2);

/// p satisfies every constraint and p >= 0, each within tol bits.
bool contains(const RateRegion2D& r, Point p, double tol);

/// Every vertex of inner lies in outer (within tol).
bool is_subset(const RateRegion2D& inner, const RateRegion2D& outer, double tol);

/// Smallest g >= 0 such that every point of outer, shifted down by g in both
/// coordinates and clipped at 0, lies in inner. Accurate to 1e-9 bits.
double max_gap(const RateRegion2D& outer, const RateRegion2D& inner);

/// Pure-geometry helper: vertices of a convex polygon around the points,
/// counterclockwise, collinear points removed.
std::vector<Point> convex_hull(std::vector<Point> pts);

/// 800x600 SVG with one closed polygon per labelled region.
std::string regions_svg(const std::vector<std::pair<std::string, RateRegion2D>>& regions);

}  // namespace mimoic
