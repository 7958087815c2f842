// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Channel instances: antenna counts, the four channel matrices, the four
// link gains and the two backhaul capacities.
//
// Naming follows transmitter-then-receiver: h12 carries transmitter 1 to
// receiver 2 and is n2 x m1. rho11/rho22 are the direct-link SNRs,
// rho12/rho21 the cross-link INRs. c12 is the backhaul from receiver 1 to
// receiver 2 and c21 the reverse, in bits per channel use (+inf allowed).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimoic/cmatrix.hpp"

namespace mimoic {

struct ChannelInstance {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    CMatrix h11, h12, h21, h22;
    double rho11 = 0.0, rho12 = 0.0, rho21 = 0.0, rho22 = 0.0;
    double c12 = 0.0, c21 = 0.0;

    friend bool operator==(const ChannelInstance&, const ChannelInstance&) = default;
};

/// Inputs of a random (CN(0,1)) channel draw.
struct ChannelSeedSpec {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    double rho11 = 1.0, rho12 = 1.0, rho21 = 1.0, rho22 = 1.0;
    double c12 = 0.0, c21 = 0.0;
    std::uint64_t seed = 0;

    /// rho_ii = snr, rho_ij = snr^alpha, C = beta * log2(snr).
    static ChannelSeedSpec from_exponents(std::size_t m1, std::size_t n1, std::size_t m2,
                                          std::size_t n2, double snr, double alpha, double beta,
                                          std::uint64_t seed);
};

/// Draws h11, h12, h21, h22 (in that order, row-major) with i.i.d. CN(0,1)
/// entries. The matrices depend only on the antenna counts and the seed.
ChannelInstance generate(const ChannelSeedSpec& spec);

/// Throws ShapeError / NegativeParameter on hard violations; returns
/// warnings for channel matrices with condition number above 1e8.
std::vector<std::string> validate(const ChannelInstance& ch);

/// 1x1 instance with unit channel matrices.
/// rho11 = snr1, rho22 = snr2, rho21 = inr1, rho12 = inr2.
ChannelInstance siso_from_scalars(double snr1, double snr2, double inr1, double inr2, double c12,
                                  double c21);

/// Relabels user 1 <-> user 2 (antennas, matrices, gains, backhauls).
ChannelInstance swap_users(const ChannelInstance& ch);

/// Same channel with different backhaul capacities.
ChannelInstance with_backhaul(ChannelInstance ch, double c12, double c21);

/// 3-transmit/4-receive vs 4-transmit/3-receive real-valued reference
/// instance (all gains 1e8); used for the cooperation-nesting checks.
ChannelInstance mimo_reference_instance(double c12, double c21);

/// Weak (5, 5, 2, 2; C = 1.1, 1.1), strong (1000, 1500, 4000, 10000; 11, 6)
/// and mixed (9000, 1500, 5000, 1000; 11, 6) SISO parameter sets.
ChannelInstance siso_weak_instance();
ChannelInstance siso_strong_instance();
ChannelInstance siso_mixed_instance();

}  // namespace mimoic
