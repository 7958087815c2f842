// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/achievability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mimoic/errors.hpp"

namespace mimoic {

namespace {

constexpr double kTol = 1e-9;

// Receiver 2's quantization noise is modelled as an extra unit-variance
// noise vector plus a virtual copy of transmitter 2's private signal, which
// together have covariance Delta.
constexpr unsigned kVirtual = 1u << 4;

CovarianceSplit swap_split(const CovarianceSplit& s) {
    return {s.q2p, s.q2c, s.q1p, s.q1c, s.q2p_root, s.q2c_root, s.q1p_root, s.q1c_root};
}

StrategyRegion evaluate_two_one_two(const ChannelInstance& ch) {
    const CovarianceSplit split = covariance_split(ch);
    const QuantizationPlan plan = quantization_plan(ch, split, StrategyOrder::two_one_two);
    const GaussianModel g(ch, split);
    auto mi = [&](unsigned src, unsigned out, unsigned known) {
        return g.mutual_information(src, out, known);
    };

    const double c12 = ch.c12;
    const double relay = std::max(ch.c21 - plan.xi, 0.0);

    // Recurring terms.
    const double own1_private = mi(kX1, kY1, kX1c | kX2c);        // I(X1;Y1|X1c,X2c)
    const double own2_private = mi(kX2, kY2, kX1c | kX2c);        // I(X2;Y2|X1c,X2c)
    const double rx2_given_x2c = mi(kX1c | kX2, kY2, kX2c);       // I(X1c,X2;Y2|X2c)
    const double rx2_all = mi(kX1c | kX2, kY2, 0);                // I(X1c,X2;Y2)
    const double cross_common = mi(kX2c, kY1, kX1);               // I(X2c;Y1|X1)
    const double rx1_all = mi(kX1 | kX2c, kY1, 0);                // I(X1,X2c;Y1)
    const double rx1_given_x1c = mi(kX1 | kX2c, kY1, kX1c);       // I(X1,X2c;Y1|X1c)
    const double coop_all = mi(kX1 | kX2c, kY1 | kY2Hat, 0);      // I(X1,X2c;Y1,Y2hat)
    const double coop_given_x1c = mi(kX1 | kX2c, kY1 | kY2Hat, kX1c);

    StrategyRegion s;
    s.order = StrategyOrder::two_one_two;
    s.xi = plan.xi;
    s.constraints = {{
        {1, 0, mi(kX1, kY1, kX2c)},
        {1, 0, own1_private + rx2_given_x2c + c12},
        {0, 1, mi(kX2, kY2, kX1c) + c12},
        {0, 1, cross_common + own2_private},
        {1, 1, rx1_all + own2_private + relay},
        {1, 1, coop_all + own2_private},
        {1, 1, rx1_given_x1c + rx2_given_x2c + c12 + relay},
        {1, 1, coop_given_x1c + rx2_given_x2c + c12},
        {1, 1, own1_private + rx2_all + c12},
        {1, 1, own1_private + cross_common + rx2_given_x2c + c12},
        {2, 1, rx1_all + own1_private + rx2_given_x2c + c12 + relay},
        {2, 1, coop_all + own1_private + rx2_given_x2c + c12},
        {1, 2, rx1_given_x1c + rx2_all + own2_private + c12 + relay},
        {1, 2, rx1_given_x1c + cross_common + rx2_given_x2c + own2_private + c12 + relay},
        {1, 2, coop_given_x1c + rx2_all + own2_private + c12},
        {1, 2, coop_given_x1c + cross_common + rx2_given_x2c + own2_private + c12},
    }};
    s.region = region_from_constraints({s.constraints.begin(), s.constraints.end()});
    return s;
}

}  // namespace

CovarianceSplit covariance_split(const ChannelInstance& ch) {
    validate(ch);
    auto build = [](const CMatrix& cross) {
        ComplementaryFactors f = resolvent_split(cross);
        HermitianMatrix priv = gram(f.p_factor, 1.0);
        HermitianMatrix common = HermitianMatrix::identity(priv.dim()) - priv;
        return std::make_tuple(std::move(priv), std::move(common), std::move(f));
    };
    auto [q1p, q1c, f1] = build(ch.h12.scaled(std::sqrt(ch.rho12)));
    auto [q2p, q2c, f2] = build(ch.h21.scaled(std::sqrt(ch.rho21)));
    return {std::move(q1p),          std::move(q1c),
            std::move(q2p),          std::move(q2c),
            std::move(f1.p_factor),  std::move(f1.complement_factor),
            std::move(f2.p_factor),  std::move(f2.complement_factor)};
}

SplitCheck check_split(const ChannelInstance& ch, const CovarianceSplit& split) {
    SplitCheck r;
    r.private_psd = psd_check(split.q1p) && psd_check(split.q2p);
    r.common_psd = psd_check(split.q1c) && psd_check(split.q2c);

    auto identity_defect = [](const HermitianMatrix& p, const HermitianMatrix& c) {
        return max_abs_diff((p + c).matrix(), CMatrix::identity(p.dim()));
    };
    r.sums_to_identity = identity_defect(split.q1p, split.q1c) <= 1e-15 &&
                         identity_defect(split.q2p, split.q2c) <= 1e-15;

    const CMatrix v1 = ch.h12.scaled(std::sqrt(ch.rho12)) * split.q1p_root;
    const CMatrix v2 = ch.h21.scaled(std::sqrt(ch.rho21)) * split.q2p_root;
    const HermitianMatrix seen1 = gram(v1, 1.0);
    const HermitianMatrix seen2 = gram(v2, 1.0);
    const auto e1 = eigenvalues(seen1);
    const auto e2 = eigenvalues(seen2);
    r.max_interference_eigenvalue = std::max(e1.back(), e2.back());
    r.below_noise_floor = psd_check(seen1, HermitianMatrix::identity(seen1.dim())) &&
                          psd_check(seen2, HermitianMatrix::identity(seen2.dim()));
    return r;
}

const char* order_name(StrategyOrder order) {
    return order == StrategyOrder::two_one_two ? "2->1->2" : "1->2->1";
}

QuantizationPlan quantization_plan(const ChannelInstance& ch, const CovarianceSplit& split,
                                   StrategyOrder order) {
    if (order == StrategyOrder::one_two_one) {
        return quantization_plan(swap_users(ch), swap_split(split), StrategyOrder::two_one_two);
    }
    if (split.q2p_root.rows() != ch.m2 || split.q2p_root.cols() != ch.m2) {
        throw DimensionMismatch("covariance split does not match the channel");
    }
    // Delta = I + V V^dagger. The part of transmitter 2's private signal that
    // receiver 1 cannot explain has covariance q2p^{1/2} P q2p^{1/2}, with
    // P = (I + rho21 q2p^{1/2} H21^dagger H21 q2p^{1/2})^{-1}; W carries it to
    // receiver 2. Then xi = log2 det(2I + VV^dagger + WW^dagger) - log2 det(Delta).
    const CMatrix v = ch.h22.scaled(std::sqrt(ch.rho22)) * split.q2p_root;
    const CMatrix seen_at_1 = ch.h21.scaled(std::sqrt(ch.rho21)) * split.q2p_root;
    const CMatrix w = v * resolvent_split(seen_at_1).p_factor;

    QuantizationPlan plan;
    plan.delta = HermitianMatrix::identity(ch.n2) + gram(v, 1.0);
    plan.xi = static_cast<double>(ch.n2) +
              logdet2_identity_plus_gram(hstack(v, w).scaled(std::sqrt(0.5))) -
              logdet2_identity_plus_gram(v);
    return plan;
}

GaussianModel::GaussianModel(const ChannelInstance& ch, const CovarianceSplit& split)
    : ch_(ch), split_(split) {}

double GaussianModel::entropy(unsigned outputs, unsigned known) const {
    if ((outputs & kY2) && (outputs & kY2Hat)) {
        throw InvalidSpec("Y2 and its quantized copy share noise; not supported together");
    }
    const CMatrix d1 = ch_.h11.scaled(std::sqrt(ch_.rho11));
    const CMatrix x12 = ch_.h12.scaled(std::sqrt(ch_.rho12));
    const CMatrix x21 = ch_.h21.scaled(std::sqrt(ch_.rho21));
    const CMatrix d2 = ch_.h22.scaled(std::sqrt(ch_.rho22));

    struct Group {
        unsigned output;
        std::size_t rows;
        double noise;
    };
    std::vector<Group> groups;
    if (outputs & kY1) groups.push_back({kY1, ch_.n1, 1.0});
    if (outputs & kY2) groups.push_back({kY2, ch_.n2, 1.0});
    if (outputs & kY2Hat) groups.push_back({kY2Hat, ch_.n2, 2.0});

    // Column block of one source across the selected outputs, whitened by
    // the per-output noise level.
    auto column = [&](unsigned source) {
        CMatrix col;
        for (const auto& g : groups) {
            CMatrix part;
            const bool at_rx1 = g.output == kY1;
            switch (source) {
                case kX1p: part = (at_rx1 ? d1 : x12) * split_.q1p_root; break;
                case kX1c: part = (at_rx1 ? d1 : x12) * split_.q1c_root; break;
                case kX2p: part = (at_rx1 ? x21 : d2) * split_.q2p_root; break;
                case kX2c: part = (at_rx1 ? x21 : d2) * split_.q2c_root; break;
                default:
                    part = g.output == kY2Hat ? d2 * split_.q2p_root
                                              : CMatrix(g.rows, split_.q2p_root.cols());
                    break;
            }
            part = part.scaled(1.0 / std::sqrt(g.noise));
            col = col.empty() ? std::move(part) : vstack(col, part);
        }
        return col;
    };

    double h = 0.0;
    for (const auto& g : groups) {
        h += static_cast<double>(g.rows) * std::log2(g.noise);
    }
    CMatrix unknown;
    for (unsigned source : {unsigned{kX1p}, unsigned{kX1c}, unsigned{kX2p}, unsigned{kX2c}, kVirtual}) {
        if (known & source) {
            continue;
        }
        if (source == kVirtual && !(outputs & kY2Hat)) {
            continue;
        }
        CMatrix col = column(source);
        unknown = unknown.empty() ? std::move(col) : hstack(unknown, col);
    }
    if (!unknown.empty()) {
        h += logdet2_identity_plus_gram(unknown);
    }
    return h;
}

double GaussianModel::mutual_information(unsigned sources, unsigned outputs,
                                         unsigned known) const {
    return entropy(outputs, known) - entropy(outputs, known | sources);
}

StrategyRegion strategy_region(const ChannelInstance& ch, StrategyOrder order) {
    if (order == StrategyOrder::two_one_two) {
        return evaluate_two_one_two(ch);
    }
    StrategyRegion s = evaluate_two_one_two(swap_users(ch));
    s.order = StrategyOrder::one_two_one;
    for (auto& c : s.constraints) {
        std::swap(c.a, c.b);
    }
    s.region = region_from_constraints({s.constraints.begin(), s.constraints.end()});
    return s;
}

RateRegion2D combined_achievable(const ChannelInstance& ch) {
    return hull_union(strategy_region(ch, StrategyOrder::two_one_two).region,
                      strategy_region(ch, StrategyOrder::one_two_one).region);
}

RateRegion2D guaranteed_inner_from_terms(const OuterTerms& t, std::size_t n1, std::size_t n2) {
    const double a = static_cast<double>(n1);
    const double b = static_cast<double>(n2);
    return region_from_constraints({
        {1.0, 0.0, t[1] - a - b},
        {0.0, 1.0, t[2] - a - b},
        {1.0, 1.0, std::min({t[3], t[4], t[5], t[6]}) - a - b - std::max(a, b)},
        {2.0, 1.0, std::min(t[7], t[9]) - 2 * a - 2 * b},
        {1.0, 2.0, std::min(t[8], t[10]) - 2 * a - 3 * b},
    });
}

RateRegion2D guaranteed_inner_region(const ChannelInstance& ch) {
    return guaranteed_inner_from_terms(outer_terms(ch), ch.n1, ch.n2);
}

}  // namespace mimoic
