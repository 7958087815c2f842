// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>

#include "mimoic/achievability.hpp"
#include "mimoic/channel.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/outer.hpp"
#include "test_support.hpp"

using namespace mimoic;
using oracle::add;
using oracle::adj;
using oracle::eye;
using oracle::inverse;
using oracle::mul;
using oracle::scale;

namespace {

ChannelInstance random_channel(std::uint64_t seed, double log10_rho_max) {
    CounterRng rng(seed);
    ChannelSeedSpec s;
    s.m1 = 1 + rng.next_word() % 4;
    s.n1 = 1 + rng.next_word() % 4;
    s.m2 = 1 + rng.next_word() % 4;
    s.n2 = 1 + rng.next_word() % 4;
    s.rho11 = std::pow(10.0, log10_rho_max * rng.next_uniform());
    s.rho12 = std::pow(10.0, log10_rho_max * rng.next_uniform());
    s.rho21 = std::pow(10.0, log10_rho_max * rng.next_uniform());
    s.rho22 = std::pow(10.0, log10_rho_max * rng.next_uniform());
    s.c12 = 30 * rng.next_uniform();
    s.c21 = 30 * rng.next_uniform();
    s.seed = rng.next_word();
    return generate(s);
}

// Private covariance by literal inverse: I - G^dagger (I + G G^dagger)^-1 G.
CMatrix literal_private(const CMatrix& g) {
    return add(eye(g.cols()), mul(mul(adj(g), inverse(add(eye(g.rows()), mul(g, adj(g))))), g), -1);
}

// xi through the capped kernel L(Q2p, sqrt(rho21) H21^dagger).
double xi_closed_form(const ChannelInstance& ch, const CovarianceSplit& split) {
    const CMatrix s = adj(ch.h21.scaled(std::sqrt(ch.rho21)));
    const HermitianMatrix capped = schur_capped(split.q2p, s);
    const CMatrix d2 = ch.h22.scaled(std::sqrt(ch.rho22));
    const CMatrix delta = add(eye(ch.n2), mul(mul(d2, split.q2p.matrix()), adj(d2)));
    const CMatrix top = add(add(eye(ch.n2), delta), mul(mul(d2, capped.matrix()), adj(d2)));
    return oracle::logdet2(top) - oracle::logdet2(delta);
}

}  // namespace

TEST(Split, NoCrossGainMeansAllPrivate) {
    ChannelInstance ch = siso_weak_instance();
    ch.rho12 = 0.0;
    const CovarianceSplit s = covariance_split(ch);
    EXPECT_NEAR(s.q1p(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(s.q1c(0, 0).real(), 0.0, 1e-15);
}

TEST(Split, ScalarExample) {
    // rho12 |H12|^2 = 2: q1p = 1 - 2/3 = 1/3.
    ChannelInstance ch = siso_from_scalars(5, 5, 1, 2, 0, 0);
    const CovarianceSplit s = covariance_split(ch);
    EXPECT_NEAR(s.q1p(0, 0).real(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(s.q1c(0, 0).real(), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(s.q2p(0, 0).real(), 0.5, 1e-15);
}

TEST(Split, MatchesLiteralInverseAndInvariants) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChannelInstance ch = random_channel(seed, 4);
        const CovarianceSplit s = covariance_split(ch);
        const CMatrix g1 = ch.h12.scaled(std::sqrt(ch.rho12));
        EXPECT_LT(oracle::max_diff(s.q1p.matrix(), literal_private(g1)), 1e-9);
        EXPECT_LT(oracle::max_diff(mul(s.q1p_root, adj(s.q1p_root)), s.q1p.matrix()), 1e-12);
        EXPECT_LT(oracle::max_diff(mul(s.q2c_root, adj(s.q2c_root)), s.q2c.matrix()), 1e-12);
        const SplitCheck c = check_split(ch, s);
        EXPECT_TRUE(c.ok()) << seed;
        EXPECT_LE(c.max_interference_eigenvalue, 1.0 + 1e-9);
    }
}

TEST(Split, InterferenceBelowNoiseFloorAtHighGain) {
    ChannelSeedSpec spec;
    spec.m1 = spec.n1 = spec.m2 = spec.n2 = 3;
    spec.rho11 = spec.rho12 = spec.rho21 = spec.rho22 = 1e9;
    spec.seed = 5;
    const ChannelInstance ch = generate(spec);
    const SplitCheck c = check_split(ch, covariance_split(ch));
    EXPECT_TRUE(c.ok());
    EXPECT_LE(c.max_interference_eigenvalue, 1.0 + 1e-9);
    EXPECT_GT(c.max_interference_eigenvalue, 0.99);
}

TEST(Quantization, NoCrossObservationGivesAntennaCount) {
    ChannelInstance ch = random_channel(3, 6);
    ch.rho21 = 0.0;
    const QuantizationPlan p = quantization_plan(ch, covariance_split(ch), StrategyOrder::two_one_two);
    EXPECT_NEAR(p.xi, static_cast<double>(ch.n2), 1e-9);
}

TEST(Quantization, SilentDirectLinkGivesAntennaCount) {
    ChannelInstance ch = random_channel(4, 3);
    ch.rho22 = 0.0;
    const QuantizationPlan p = quantization_plan(ch, covariance_split(ch), StrategyOrder::two_one_two);
    EXPECT_NEAR(p.xi, static_cast<double>(ch.n2), 1e-12);
    EXPECT_LT(oracle::max_diff(p.delta.matrix(), eye(ch.n2)), 1e-15);
}

TEST(Quantization, WeakSisoWithinOneBit) {
    const ChannelInstance ch = siso_weak_instance();
    const QuantizationPlan p = quantization_plan(ch, covariance_split(ch), StrategyOrder::two_one_two);
    EXPECT_GT(p.xi, 0.0);
    EXPECT_LE(p.xi, 1.0);
    // Scalar closed form: q2p = 1/3, delta = 1 + 5/3, capped term 5 * (1/3)/(1 + 2/3).
    const double delta = 1.0 + 5.0 / 3.0;
    const double capped = 5.0 * (1.0 / 3.0) / (1.0 + 2.0 / 3.0);
    EXPECT_NEAR(p.xi, std::log2(1.0 + delta + capped) - std::log2(delta), 1e-14);
}

TEST(Quantization, MatchesCappedKernelAndEntropyRoute) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChannelInstance ch = random_channel(500 + seed, 3);
        const CovarianceSplit split = covariance_split(ch);
        const QuantizationPlan p = quantization_plan(ch, split, StrategyOrder::two_one_two);
        EXPECT_NEAR(p.xi, xi_closed_form(ch, split), 1e-8) << seed;
        EXPECT_LE(p.xi, static_cast<double>(ch.n2) + 1e-9);
        EXPECT_GE(p.xi, 0.0);
        const GaussianModel g(ch, split);
        const double route = g.entropy(kY1 | kY2Hat, kX1 | kX2c) - g.entropy(kY1, kX1 | kX2c) -
                             logdet2_hpd(p.delta);
        EXPECT_NEAR(p.xi, route, 1e-8) << seed;
        const QuantizationPlan mirrored = quantization_plan(ch, split, StrategyOrder::one_two_one);
        EXPECT_EQ(mirrored.delta.dim(), ch.n1);
        EXPECT_LE(mirrored.xi, static_cast<double>(ch.n1) + 1e-9);
    }
}

TEST(Quantization, BoundHoldsAtExtremeGains) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ChannelInstance ch = random_channel(9000 + seed, 9);
        const CovarianceSplit split = covariance_split(ch);
        EXPECT_LE(quantization_plan(ch, split, StrategyOrder::two_one_two).xi, ch.n2 + 1e-9);
        EXPECT_LE(quantization_plan(ch, split, StrategyOrder::one_two_one).xi, ch.n1 + 1e-9);
    }
}

TEST(GaussianModel, MatchesReceiverFormulas) {
    const ChannelInstance ch = random_channel(21, 2);
    const CovarianceSplit split = covariance_split(ch);
    const GaussianModel g(ch, split);
    const CMatrix d1 = ch.h11.scaled(std::sqrt(ch.rho11));
    const CMatrix x21 = ch.h21.scaled(std::sqrt(ch.rho21));
    const CMatrix noise1 = add(eye(ch.n1), mul(x21, adj(x21)));
    const double expect = oracle::logdet2(add(noise1, mul(d1, adj(d1)))) - oracle::logdet2(noise1);
    EXPECT_NEAR(g.mutual_information(kX1, kY1), expect, 1e-10);
    // h(Y1 | X1c, X2c) is the private-power receiver covariance.
    const CMatrix priv = add(add(eye(ch.n1), mul(mul(d1, split.q1p.matrix()), adj(d1))),
                             mul(mul(x21, split.q2p.matrix()), adj(x21)));
    EXPECT_NEAR(g.entropy(kY1, kX1c | kX2c), oracle::logdet2(priv), 1e-10);
    // Chain rule.
    EXPECT_NEAR(g.mutual_information(kX1 | kX2, kY1),
                g.mutual_information(kX1, kY1) + g.mutual_information(kX2, kY1, kX1), 1e-10);
    EXPECT_NEAR(g.entropy(kY1 | kY2, kX1 | kX2), 0.0, 1e-12);
    EXPECT_THROW(g.entropy(kY2 | kY2Hat, 0), InvalidSpec);
}

TEST(Strategy, AllZeroChannelGivesZeroRates) {
    ChannelInstance ch = siso_from_scalars(0, 0, 0, 0, 0, 0);
    for (auto order : {StrategyOrder::two_one_two, StrategyOrder::one_two_one}) {
        const StrategyRegion s = strategy_region(ch, order);
        for (const auto& v : s.region.vertices()) {
            EXPECT_NEAR(v.r1, 0.0, 1e-12);
            EXPECT_NEAR(v.r2, 0.0, 1e-12);
        }
    }
}

TEST(Strategy, NoBackhaulStillNonempty) {
    const ChannelInstance ch = with_backhaul(siso_weak_instance(), 0, 0);
    const StrategyRegion s = strategy_region(ch, StrategyOrder::two_one_two);
    EXPECT_FALSE(s.region.empty());
    EXPECT_GT(s.region.vertices().size(), 2u);
    EXPECT_EQ(s.constraints.size(), 16u);
}

TEST(Strategy, WeakSisoInsideOuter) {
    const ChannelInstance ch = siso_weak_instance();
    const RateRegion2D outer = outer_region(ch);
    for (auto order : {StrategyOrder::two_one_two, StrategyOrder::one_two_one}) {
        EXPECT_TRUE(is_subset(strategy_region(ch, order).region, outer, 1e-6));
    }
    const RateRegion2D hull = combined_achievable(ch);
    EXPECT_TRUE(is_subset(strategy_region(ch, StrategyOrder::two_one_two).region, hull, 1e-9));
    EXPECT_TRUE(is_subset(strategy_region(ch, StrategyOrder::one_two_one).region, hull, 1e-9));
}

TEST(Strategy, StrongSisoHullInsideOuter) {
    const ChannelInstance ch = siso_strong_instance();
    EXPECT_TRUE(is_subset(combined_achievable(ch), outer_region(ch), 1e-6));
}

TEST(Strategy, SymmetricChannelGivesSymmetricHull) {
    ChannelInstance ch = generate({2, 2, 2, 2, 100, 30, 30, 100, 4, 4, 11});
    ch.h22 = ch.h11;
    ch.h21 = ch.h12;
    const RateRegion2D hull = combined_achievable(ch);
    for (const auto& v : hull.vertices()) {
        EXPECT_TRUE(contains(hull, {v.r2, v.r1}, 1e-9)) << v.r1 << "," << v.r2;
    }
}

TEST(Strategy, MirroredOrderIsSwappedRegion) {
    const ChannelInstance ch = random_channel(31, 4);
    const StrategyRegion a = strategy_region(ch, StrategyOrder::one_two_one);
    const StrategyRegion b = strategy_region(swap_users(ch), StrategyOrder::two_one_two);
    for (std::size_t k = 0; k < 16; ++k) {
        EXPECT_EQ(a.constraints[k].a, b.constraints[k].b);
        EXPECT_EQ(a.constraints[k].c, b.constraints[k].c);
    }
    EXPECT_EQ(a.xi, b.xi);
}

TEST(Strategy, AchievableInsideOuterOnRandomChannels) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChannelInstance ch = random_channel(700 + seed, 8);
        EXPECT_TRUE(is_subset(combined_achievable(ch), outer_region(ch), 1e-6)) << seed;
    }
}

TEST(Guaranteed, ZeroInstanceIsEmpty) {
    const RateRegion2D r = guaranteed_inner_region(siso_from_scalars(0, 0, 0, 0, 0, 0));
    EXPECT_TRUE(r.empty());
    ASSERT_EQ(r.vertices().size(), 1u);
    EXPECT_EQ(r.vertices()[0], (Point{0, 0}));
}

TEST(Guaranteed, ReferenceMimoConstraintArithmetic) {
    const ChannelInstance ch = mimo_reference_instance(15, 21);
    const OuterTerms t = outer_terms(ch);
    const RateRegion2D r = guaranteed_inner_region(ch);
    EXPECT_FALSE(r.empty());
    EXPECT_DOUBLE_EQ(r.bound(1, 0), t[1] - 7);
    EXPECT_DOUBLE_EQ(r.bound(0, 1), t[2] - 7);
    EXPECT_DOUBLE_EQ(r.bound(1, 1), std::min({t[3], t[4], t[5], t[6]}) - 7 - 4);
    EXPECT_DOUBLE_EQ(r.bound(2, 1), std::min(t[7], t[9]) - 14);
    EXPECT_DOUBLE_EQ(r.bound(1, 2), std::min(t[8], t[10]) - 8 - 9);
    EXPECT_TRUE(is_subset(r, outer_region(ch), 1e-9));
}

TEST(Guaranteed, ErodedOuterInsideGuaranteed) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ChannelInstance ch = random_channel(1300 + seed, 8);
        const OuterTerms t = outer_terms(ch);
        const double g = static_cast<double>(ch.n1 + ch.n2);
        EXPECT_TRUE(is_subset(erode_by_box(outer_region_from_terms(t), g, g),
                              guaranteed_inner_from_terms(t, ch.n1, ch.n2), 1e-9))
            << seed;
    }
}
