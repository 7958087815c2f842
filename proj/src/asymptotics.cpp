// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mimoic/channel.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/outer.hpp"

namespace mimoic {

namespace {

double pos(double x) { return x > 0.0 ? x : 0.0; }

void check_dof_spec(const DofSpec& s) {
    if (s.m1 == 0 || s.n1 == 0 || s.m2 == 0 || s.n2 == 0) {
        throw InvalidSpec("antenna counts must be at least 1");
    }
    if (!(s.beta12 >= 0.0) || !(s.beta21 >= 0.0) || !std::isfinite(s.beta12) ||
        !std::isfinite(s.beta21)) {
        throw InvalidSpec("backhaul exponents must be finite and nonnegative");
    }
}

void check_gdof_spec(const GdofSpec& s) {
    if (s.m == 0) {
        throw InvalidSpec("antenna count must be at least 1");
    }
    if (!(s.alpha >= 0.0) || !std::isfinite(s.alpha)) {
        throw InvalidSpec("alpha must be finite and nonnegative");
    }
    if (!(s.beta >= 0.0) || !std::isfinite(s.beta)) {
        throw InvalidSpec("beta must be finite and nonnegative");
    }
}

DofRegion region_from_bounds(const std::array<double, 10>& b) {
    std::vector<RateConstraint> cs;
    for (std::size_t k = 1; k <= 10; ++k) {
        RateConstraint c = OuterTerms::direction(k);
        c.c = b[k - 1];
        cs.push_back(c);
    }
    return region_from_constraints(std::move(cs));
}

struct Branch {
    double lo, hi;
    double value;
};

}  // namespace

std::array<double, 10> dof_bounds(const DofSpec& s) {
    check_dof_spec(s);
    const double m1 = static_cast<double>(s.m1), n1 = static_cast<double>(s.n1);
    const double m2 = static_cast<double>(s.m2), n2 = static_cast<double>(s.n2);
    const double b12 = s.beta12, b21 = s.beta21;

    // Prelogs shared by several bounds.
    const double rx1_sum = std::min(n1, pos(m1 - n2) + m2);
    const double rx2_sum = std::min(n2, pos(m2 - n1) + m1);
    const double rx1_private = std::min(n1, pos(m1 - n2));
    const double rx2_private = std::min(n2, pos(m2 - n1));
    const double rx1_all = std::min(n1, m1 + m2);
    const double rx2_all = std::min(n2, m1 + m2);

    return {
        std::min(m1, n1) + std::min(std::min(n2, pos(m1 - n1)), b21),
        std::min(m2, n2) + std::min(std::min(n1, pos(m2 - n2)), b12),
        rx1_sum + rx2_sum + b12 + b21,
        rx1_private + rx2_all + b12,
        rx2_private + rx1_all + b21,
        std::min(n1 + n2, m1 + m2),
        rx2_sum + rx1_private + rx1_all + b12 + b21,
        rx1_sum + rx2_private + rx2_all + b12 + b21,
        std::min(n1 + n2, m1) + rx1_all + b21,
        std::min(n1 + n2, m2) + rx2_all + b12,
    };
}

DofRegion dof_region(const DofSpec& s) { return region_from_bounds(dof_bounds(s)); }

double symmetric_dof_value(std::size_t m, std::size_t n, double beta) {
    const auto b = dof_bounds({m, n, m, n, beta, beta});
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= 10; ++k) {
        const RateConstraint dir = OuterTerms::direction(k);
        d = std::min(d, b[k - 1] / (dir.a + dir.b));
    }
    return d;
}

double coop_saturation_beta(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw InvalidSpec("antenna counts must be at least 1");
    }
    const double md = static_cast<double>(m), nd = static_cast<double>(n);
    return std::min(nd, pos(2.0 * md - nd));
}

std::array<double, 10> gdof_bounds(const GdofSpec& s) {
    check_gdof_spec(s);
    const double m = static_cast<double>(s.m), a = s.alpha, b = s.beta;
    const double single = m + std::min(pos(a - 1.0) * m, b);
    const double weak = m * std::max(pos(1.0 - a), a);
    const double strong = m * std::max(1.0, a);
    const double private_part = pos(1.0 - a) * m;
    const double sum_mix = private_part + strong + b;
    const double triple = weak + private_part + strong + 2.0 * b;
    const double genie = m * std::max(pos(2.0 - a), a) + strong + b;
    return {single, single, 2.0 * weak + 2.0 * b, sum_mix, sum_mix, 2.0 * strong,
            triple, triple, genie, genie};
}

DofRegion gdof_region(const GdofSpec& s) {
    // i5 duplicates i4; keep nine distinct constraints.
    const auto b = gdof_bounds(s);
    std::vector<RateConstraint> cs;
    for (std::size_t k = 1; k <= 10; ++k) {
        if (k == 5) {
            continue;
        }
        RateConstraint c = OuterTerms::direction(k);
        c.c = b[k - 1];
        cs.push_back(c);
    }
    return region_from_constraints(std::move(cs));
}

double gdof_value(const GdofSpec& s) {
    check_gdof_spec(s);
    const double m = static_cast<double>(s.m), a = s.alpha, b = s.beta;
    const double weak = m * std::max(pos(1.0 - a), a);
    const double strong = m * std::max(1.0, a);
    const double private_part = pos(1.0 - a) * m;
    return std::min({
        m + std::min(pos(a - 1.0) * m, b),
        weak + b,
        0.5 * private_part + 0.5 * strong + 0.5 * b,
        strong,
        weak / 3.0 + private_part / 3.0 + strong / 3.0 + 2.0 * b / 3.0,
        m * std::max(pos(2.0 - a), a) / 3.0 + strong / 3.0 + b / 3.0,
    });
}

double gdof_piecewise(const GdofSpec& s) {
    check_gdof_spec(s);
    const double m = static_cast<double>(s.m), a = s.alpha, b = s.beta;
    const double inf = std::numeric_limits<double>::infinity();
    const double r = b / m;

    std::vector<std::vector<Branch>> tables;
    if (b <= m / 2.0) {
        const double knee = 2.0 / 3.0 - b / (3.0 * m);
        tables.push_back({
            {0.0, r, m},
            {r, 0.5, m * pos(1.0 - a) + b},
            {0.5, knee, m * a + b},
            {knee, 1.0, 0.5 * (m * pos(2.0 - a) + b)},
            {1.0, 2.0 + r, 0.5 * (m * a + b)},
            {2.0 + r, inf, m + b},
        });
    }
    if (b >= m / 2.0 && b <= m) {
        tables.push_back({
            {0.0, r, m},
            {r, 1.0, 0.5 * (m * pos(2.0 - a) + b)},
            {1.0, 2.0 + r, 0.5 * (m * a + b)},
            {2.0 + r, inf, m + b},
        });
    }
    if (b >= m) {
        tables.push_back({
            {0.0, 1.0, m},
            {1.0, r, m * a},
            {r, 2.0 + r, 0.5 * (m * a + b)},
            {2.0 + r, inf, m + b},
        });
    }

    bool found = false;
    double lo = inf, hi = -inf;
    for (const auto& table : tables) {
        for (const auto& br : table) {
            if (br.lo <= br.hi && a >= br.lo && a <= br.hi) {
                found = true;
                lo = std::min(lo, br.value);
                hi = std::max(hi, br.value);
            }
        }
    }
    if (!found) {
        throw Error("gdof_piecewise: no branch covers alpha");
    }
    if (hi - lo > 1e-12) {
        std::ostringstream os;
        os << "gdof_piecewise: branches disagree at alpha = " << a << " (" << lo << " vs " << hi
           << ")";
        throw Error(os.str());
    }
    return lo;
}

double gdof_nrc(std::size_t m, double alpha) {
    if (m == 0 || !(alpha >= 0.0)) {
        throw InvalidSpec("gdof_nrc: need m >= 1 and alpha >= 0");
    }
    const double md = static_cast<double>(m);
    if (alpha <= 0.5) return md * (1.0 - alpha);
    if (alpha <= 2.0 / 3.0) return md * alpha;
    if (alpha <= 1.0) return 0.5 * md * (2.0 - alpha);
    if (alpha <= 2.0) return 0.5 * md * alpha;
    return md;
}

std::vector<std::pair<double, double>> gdof_curve(std::size_t m, double beta,
                                                  const std::vector<double>& alpha_grid) {
    if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end())) {
        throw InvalidSpec("alpha grid must be sorted");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(alpha_grid.size());
    for (double a : alpha_grid) {
        out.emplace_back(a, gdof_value({m, a, beta}));
    }
    return out;
}

std::vector<double> alpha_grid(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0.0) || lo < 0.0 || hi < lo) {
        throw InvalidSpec("alpha grid needs 0 <= lo <= hi and step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> g(count);
    for (std::size_t k = 0; k < count; ++k) {
        g[k] = lo + static_cast<double>(k) * step;
    }
    return g;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& curve) {
    std::string out = "alpha,gdof\n";
    char buf[64];
    for (const auto& [a, g] : curve) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", a, g);
        out += buf;
    }
    return out;
}

std::array<double, 10> predicted_prelogs(const SlopeSweep& sweep) {
    const bool square = sweep.m1 == sweep.n1 && sweep.n1 == sweep.m2 && sweep.m2 == sweep.n2;
    if (square) {
        return gdof_bounds({sweep.m1, sweep.alpha, sweep.beta});
    }
    if (sweep.alpha != 1.0) {
        throw InvalidSpec("prelogs for unequal antenna counts are known only for alpha = 1");
    }
    return dof_bounds({sweep.m1, sweep.n1, sweep.m2, sweep.n2, sweep.beta, sweep.beta});
}

std::vector<SlopeEstimate> empirical_slope(const SlopeSweep& sweep) {
    const auto predicted = predicted_prelogs(sweep);
    std::vector<double> snr = sweep.snr;
    std::sort(snr.begin(), snr.end());
    if (snr.size() < 4 || !(snr.front() > 0.0) || !std::isfinite(snr.back()) ||
        snr.back() / snr.front() < 1e4 * (1.0 - 1e-12)) {
        throw IllConditionedSweep("SNR sweep must have >= 4 positive points spanning 4 decades");
    }

    const std::size_t first = snr.size() / 2;
    std::vector<double> xs;
    std::vector<std::array<double, 10>> ys;
    for (std::size_t i = first; i < snr.size(); ++i) {
        const ChannelSeedSpec spec = ChannelSeedSpec::from_exponents(
            sweep.m1, sweep.n1, sweep.m2, sweep.n2, snr[i], sweep.alpha, sweep.beta, sweep.seed);
        OuterTerms t;
        try {
            t = outer_terms(generate(spec));
        } catch (const Error& e) {
            throw IllConditionedSweep(std::string("outer term evaluation failed: ") + e.what());
        }
        for (double v : t.values) {
            if (!std::isfinite(v)) {
                throw IllConditionedSweep("outer term is not finite along the sweep");
            }
        }
        xs.push_back(std::log2(snr[i]));
        ys.push_back(t.values);
    }
    if (xs.size() < 2 || xs.back() == xs.front()) {
        throw IllConditionedSweep("top half of the sweep has fewer than two distinct points");
    }

    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    for (double x : xs) mx += x;
    mx /= n;
    double sxx = 0.0;
    for (double x : xs) sxx += (x - mx) * (x - mx);

    std::vector<SlopeEstimate> out;
    for (std::size_t k = 0; k < 10; ++k) {
        double my = 0.0;
        for (const auto& y : ys) my += y[k];
        my /= n;
        double sxy = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i][k] - my);
        SlopeEstimate e;
        e.term = OuterTerms::name(k + 1);
        e.predicted = predicted[k];
        e.estimated = sxy / sxx;
        e.abs_err = std::abs(e.estimated - e.predicted);
        out.push_back(e);
    }
    return out;
}

}  // namespace mimoic
