// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Achievable regions: the private/common covariance split, the quantization
// step of the cooperation protocol, the two per-order strategy regions and
// the gap-certified inner region.

#pragma once

#include <array>
#include <cstdint>

#include "mimoic/channel.hpp"
#include "mimoic/hermitian.hpp"
#include "mimoic/outer.hpp"
#include "mimoic/region.hpp"

namespace mimoic {

/// Private covariance q_ip = (I + rho_ij H_ij^dagger H_ij)^{-1} (cross link of
/// transmitter i) and common covariance q_ic = I - q_ip. The square-root
/// factors are kept so checks can avoid forming ill-conditioned products.
struct CovarianceSplit {
    HermitianMatrix q1p, q1c, q2p, q2c;
    CMatrix q1p_root, q1c_root, q2p_root, q2c_root;  // q = root * root^dagger
};

CovarianceSplit covariance_split(const ChannelInstance& ch);

struct SplitCheck {
    bool private_psd = false;
    bool common_psd = false;
    bool sums_to_identity = false;
    bool below_noise_floor = false;  // rho_ij H_ij q_ip H_ij^dagger <= I
    double max_interference_eigenvalue = 0.0;

    bool ok() const { return private_psd && common_psd && sums_to_identity && below_noise_floor; }
};

/// Checks every split invariant at tolerance 1e-9.
SplitCheck check_split(const ChannelInstance& ch, const CovarianceSplit& split);

/// two_one_two: receiver 2 forwards a quantized observation to receiver 1
/// over c21, receiver 1 returns a bin index over c12. one_two_one mirrors it.
enum class StrategyOrder { two_one_two, one_two_one };

const char* order_name(StrategyOrder order);

/// Distortion of the forwarded observation and the rate it costs.
struct QuantizationPlan {
    HermitianMatrix delta;
    double xi = 0.0;
};

QuantizationPlan quantization_plan(const ChannelInstance& ch, const CovarianceSplit& split,
                                   StrategyOrder order);

/// Sources of the Gaussian model used for every mutual information below.
enum Source : unsigned {
    kX1p = 1u << 0,
    kX1c = 1u << 1,
    kX2p = 1u << 2,
    kX2c = 1u << 3,
    kX1 = kX1p | kX1c,
    kX2 = kX2p | kX2c,
};

/// Outputs: the two receiver observations and receiver 2's quantized copy.
enum Output : unsigned {
    kY1 = 1u << 0,
    kY2 = 1u << 1,
    kY2Hat = 1u << 2,
};

/// Jointly Gaussian model of one channel under a covariance split. Entropies
/// are in bits and omit the log2(pi e) per-dimension constant, which cancels
/// in every mutual information.
class GaussianModel {
public:
    GaussianModel(const ChannelInstance& ch, const CovarianceSplit& split);

    /// h(outputs | known sources).
    double entropy(unsigned outputs, unsigned known) const;
    /// I(sources; outputs | known).
    double mutual_information(unsigned sources, unsigned outputs, unsigned known = 0) const;

private:
    ChannelInstance ch_;
    CovarianceSplit split_;
};

struct StrategyRegion {
    StrategyOrder order = StrategyOrder::two_one_two;
    double xi = 0.0;
    std::array<RateConstraint, 16> constraints{};
    RateRegion2D region;
};

StrategyRegion strategy_region(const ChannelInstance& ch, StrategyOrder order);

/// Convex hull of the two strategy regions.
RateRegion2D combined_achievable(const ChannelInstance& ch);

/// Outer-bound constraints displaced by the antenna-count constants:
/// R1 <= i1 - N1 - N2, R2 <= i2 - N1 - N2,
/// R1+R2 <= min(i3..i6) - N1 - N2 - max(N1, N2),
/// 2R1+R2 <= min(i7, i9) - 2N1 - 2N2, R1+2R2 <= min(i8, i10) - 2N1 - 3N2.
RateRegion2D guaranteed_inner_region(const ChannelInstance& ch);
RateRegion2D guaranteed_inner_from_terms(const OuterTerms& t, std::size_t n1, std::size_t n2);

}  // namespace mimoic
