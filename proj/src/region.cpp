// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mimoic/errors.hpp"

namespace mimoic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<std::array<double, 2>, 5> kDirections = {
    {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}};

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool same_point(const Point& p, const Point& q) {
    return std::abs(p.r1 - q.r1) <= kVertexTol && std::abs(p.r2 - q.r2) <= kVertexTol;
}

bool feasible(const std::vector<RateConstraint>& cs, const Point& p) {
    if (p.r1 < -kVertexTol || p.r2 < -kVertexTol) {
        return false;
    }
    for (const auto& c : cs) {
        if (std::isinf(c.c)) {
            continue;
        }
        const double lhs = c.a * p.r1 + c.b * p.r2;
        if (lhs > c.c + kVertexTol * (1.0 + std::abs(c.c))) {
            return false;
        }
    }
    return true;
}

void check_constraint(const RateConstraint& c) {
    if (!std::isfinite(c.a) || !std::isfinite(c.b) || c.a < 0.0 || c.b < 0.0 ||
        (c.a == 0.0 && c.b == 0.0)) {
        throw InvalidSpec("rate constraint direction must be finite, nonnegative and nonzero");
    }
    if (std::isnan(c.c) || c.c == -kInf) {
        throw InvalidSpec("rate constraint bound must be a number or +inf");
    }
}

// Line a*x + b*y = c, with the axes included as (1,0,0) and (0,1,0).
struct Line {
    double a, b, c;
};

bool intersect(const Line& l, const Line& m, Point& out) {
    const double det = l.a * m.b - l.b * m.a;
    const double scale = (std::abs(l.a) + std::abs(l.b)) * (std::abs(m.a) + std::abs(m.b));
    if (std::abs(det) <= 1e-14 * scale) {
        return false;
    }
    out.r1 = (l.c * m.b - l.b * m.c) / det;
    out.r2 = (l.a * m.c - l.c * m.a) / det;
    return true;
}

RateConstraint canonical_edge(double nx, double ny, const Point& p, const Point& q) {
    const double norm = std::hypot(nx, ny);
    for (const auto& d : kDirections) {
        const double dn = std::hypot(d[0], d[1]);
        if (std::abs(nx * d[1] - ny * d[0]) <= 1e-9 * norm * dn) {
            const double c = std::max(d[0] * p.r1 + d[1] * p.r2, d[0] * q.r1 + d[1] * q.r2);
            return {d[0], d[1], c};
        }
    }
    const double m = std::max(nx, ny);
    const double a = std::max(nx / m, 0.0);
    const double b = std::max(ny / m, 0.0);
    return {a, b, std::max(a * p.r1 + b * p.r2, a * q.r1 + b * q.r2)};
}

}  // namespace

double RateRegion2D::bound(double a, double b) const {
    double best = kInf;
    for (const auto& c : constraints_) {
        if (c.a == a && c.b == b) {
            best = std::min(best, c.c);
        }
    }
    return best;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        return p.r1 < q.r1 || (p.r1 == q.r1 && p.r2 < q.r2);
    });
    std::vector<Point> uniq;
    for (const auto& p : pts) {
        const bool dup = std::any_of(uniq.begin(), uniq.end(),
                                     [&](const Point& q) { return same_point(p, q); });
        if (!dup) {
            uniq.push_back(p);
        }
    }
    if (uniq.size() <= 2) {
        return uniq;
    }
    auto turn_ok = [](const Point& o, const Point& a, const Point& b) {
        const double la = std::hypot(a.r1 - o.r1, a.r2 - o.r2);
        const double lb = std::hypot(b.r1 - o.r1, b.r2 - o.r2);
        return cross(o, a, b) > 1e-12 * la * lb;
    };
    std::vector<Point> hull(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && !turn_ok(hull[k - 2], hull[k - 1], p)) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = uniq.size() - 1; i-- > 0;) {
        while (k >= lower && !turn_ok(hull[k - 2], hull[k - 1], uniq[i])) {
            --k;
        }
        hull[k++] = uniq[i];
    }
    hull.resize(k - 1);
    return hull;
}

RateRegion2D region_from_constraints(std::vector<RateConstraint> cs) {
    bool bounded_x = false;
    bool bounded_y = false;
    bool empty = false;
    for (const auto& c : cs) {
        check_constraint(c);
        if (std::isinf(c.c)) {
            continue;
        }
        bounded_x = bounded_x || c.a > 0.0;
        bounded_y = bounded_y || c.b > 0.0;
        if (c.c < -kVertexTol) {
            empty = true;
        }
    }
    if (!bounded_x || !bounded_y) {
        throw Unbounded("rate region has no finite bound along one axis");
    }

    RateRegion2D r;
    r.constraints_ = std::move(cs);
    r.empty_ = empty;
    r.vertices_ = {Point{}};
    if (empty) {
        return r;
    }

    std::vector<Line> lines = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    for (const auto& c : r.constraints_) {
        if (std::isfinite(c.c)) {
            lines.push_back({c.a, c.b, std::max(c.c, 0.0)});
        }
    }
    std::vector<Point> candidates;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Point p;
            if (intersect(lines[i], lines[j], p) && feasible(r.constraints_, p)) {
                // Also turns -0.0 into +0.0.
                p.r1 = p.r1 > 0.0 ? p.r1 : 0.0;
                p.r2 = p.r2 > 0.0 ? p.r2 : 0.0;
                candidates.push_back(p);
            }
        }
    }
    candidates.push_back(Point{});
    r.vertices_ = convex_hull(std::move(candidates));
    return r;
}

RateRegion2D region_from_parts(std::vector<RateConstraint> cs, std::vector<Point> vertices,
                               bool empty) {
    RateRegion2D r = region_from_constraints(std::move(cs));
    if (r.empty_ != empty) {
        throw ParseError("region empty flag disagrees with its constraints");
    }
    if (vertices.size() != r.vertices_.size()) {
        throw ParseError("region vertex list disagrees with its constraints");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = r.vertices_[i];
        const double tol = 1e-7 * (1.0 + std::max(std::abs(q.r1), std::abs(q.r2)));
        if (std::abs(p.r1 - q.r1) > tol || std::abs(p.r2 - q.r2) > tol) {
            throw ParseError("region vertex list disagrees with its constraints");
        }
    }
    r.vertices_ = std::move(vertices);
    return r;
}

RateRegion2D erode_by_box(const RateRegion2D& r, double gx, double gy) {
    if (!(gx >= 0.0) || !(gy >= 0.0)) {
        throw NegativeParameter("erosion box sides must be nonnegative");
    }
    std::vector<RateConstraint> cs = r.constraints();
    for (auto& c : cs) {
        if (std::isfinite(c.c)) {
            c.c -= c.a * gx + c.b * gy;
        }
    }
    if (r.empty() && !cs.empty()) {
        // Stay empty even when the original emptiness came from a tiny negative bound.
        bool has_negative = false;
        for (const auto& c : cs) {
            has_negative = has_negative || c.c < -kVertexTol;
        }
        if (!has_negative) {
            cs.push_back({1.0, 0.0, -1.0});
        }
    }
    return region_from_constraints(std::move(cs));
}

RateRegion2D hull_union(const RateRegion2D& r1, const RateRegion2D& r2) {
    std::vector<Point> pool = r1.vertices();
    pool.insert(pool.end(), r2.vertices().begin(), r2.vertices().end());
    pool.push_back(Point{});
    std::vector<Point> hull = convex_hull(std::move(pool));

    double max_x = 0.0;
    double max_y = 0.0;
    for (const auto& p : hull) {
        max_x = std::max(max_x, p.r1);
        max_y = std::max(max_y, p.r2);
    }
    std::vector<RateConstraint> cs = {{1.0, 0.0, max_x}, {0.0, 1.0, max_y}};
    for (std::size_t i = 0; hull.size() >= 3 && i < hull.size(); ++i) {
        const Point& p = hull[i];
        const Point& q = hull[(i + 1) % hull.size()];
        const double nx = q.r2 - p.r2;
        const double ny = p.r1 - q.r1;
        const double norm = std::hypot(nx, ny);
        if (nx < -1e-12 * norm || ny < -1e-12 * norm) {
            continue;  // axis edges
        }
        RateConstraint c = canonical_edge(std::max(nx, 0.0), std::max(ny, 0.0), p, q);
        const bool dup = std::any_of(cs.begin(), cs.end(), [&](const RateConstraint& o) {
            return o.a == c.a && o.b == c.b;
        });
        if (!dup) {
            cs.push_back(c);
        }
    }

    RateRegion2D out;
    out.constraints_ = std::move(cs);
    out.vertices_ = std::move(hull);
    out.empty_ = r1.empty() && r2.empty();
    return out;
}

bool contains(const RateRegion2D& r, Point p, double tol) {
    if (r.empty()) {
        return std::abs(p.r1) <= tol && std::abs(p.r2) <= tol;
    }
    if (p.r1 < -tol || p.r2 < -tol) {
        return false;
    }
    for (const auto& c : r.constraints()) {
        if (std::isinf(c.c)) {
            continue;
        }
        if (c.a * p.r1 + c.b * p.r2 > c.c + tol * (c.a + c.b)) {
            return false;
        }
    }
    return true;
}

bool is_subset(const RateRegion2D& inner, const RateRegion2D& outer, double tol) {
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](const Point& v) { return contains(outer, v, tol); });
}

double max_gap(const RateRegion2D& outer, const RateRegion2D& inner) {
    constexpr double kTightTol = 1e-12;
    double gap = 0.0;
    for (const auto& v : outer.vertices()) {
        auto shifted = [&](double g) {
            return Point{std::max(v.r1 - g, 0.0), std::max(v.r2 - g, 0.0)};
        };
        if (contains(inner, v, kTightTol)) {
            continue;
        }
        double lo = 0.0;
        double hi = std::max(v.r1, v.r2);
        for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (contains(inner, shifted(mid), kTightTol)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        gap = std::max(gap, hi);
    }
    return gap;
}

std::string regions_svg(const std::vector<std::pair<std::string, RateRegion2D>>& regions) {
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 600.0;
    constexpr double kMargin = 70.0;
    static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                          "#9467bd", "#ff7f0e", "#8c564b"};

    double extent = 0.0;
    for (const auto& [name, r] : regions) {
        for (const auto& v : r.vertices()) {
            extent = std::max({extent, v.r1, v.r2});
        }
    }
    if (extent <= 0.0) {
        extent = 1.0;
    }
    const double raw_step = extent / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw_step) {
            step = m * mag;
            break;
        }
    }
    const double axis_max = std::ceil(extent / step) * step;
    const double sx = (kWidth - 2 * kMargin) / axis_max;
    const double sy = (kHeight - 2 * kMargin) / axis_max;
    auto px = [&](double r1) { return kMargin + r1 * sx; };
    auto py = [&](double r2) { return kHeight - kMargin - r2 * sy; };

    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    auto label = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(axis_max))
       << "\" y2=\"" << num(py(0)) << "\"/>\n";
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0))
       << "\" y2=\"" << num(py(axis_max)) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
    const int ticks = static_cast<int>(std::lround(axis_max / step));
    for (int i = 0; i <= ticks; ++i) {
        const double t = i * step;
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(py(0) + 18)
           << "\" text-anchor=\"middle\">" << label(t) << "</text>\n";
        os << "<text x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(t) + 4)
           << "\" text-anchor=\"end\">" << label(t) << "</text>\n";
    }
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 20)
       << "\" text-anchor=\"middle\">R1 (bits)</text>\n";
    os << "<text x=\"20\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << num(kHeight / 2) << ")\">R2 (bits)</text>\n";
    os << "</g>\n";

    std::size_t idx = 0;
    for (const auto& [name, r] : regions) {
        const char* color = kColors[idx % std::size(kColors)];
        os << "<polygon class=\"region\" data-name=\"" << name << "\" fill=\"" << color
           << "\" fill-opacity=\"0.15\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        const auto& vs = r.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            os << (i == 0 ? "" : " ") << num(px(vs[i].r1)) << "," << num(py(vs[i].r2));
        }
        os << "\"/>\n";
        os << "<text x=\"" << num(kWidth - kMargin) << "\" y=\"" << num(kMargin + 16.0 * idx)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
           << "\">" << name << "</text>\n";
        ++idx;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mimoic
