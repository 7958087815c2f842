// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// The ten closed-form outer-bound terms and the outer region they define.

#pragma once

#include <array>
#include <string>

#include "mimoic/channel.hpp"
#include "mimoic/region.hpp"

namespace mimoic {

/// Right-hand sides, in bits. Directions: i1 (1,0); i2 (0,1); i3..i6 (1,1);
/// i7, i9 (2,1); i8, i10 (1,2). Terms that add a backhaul capacity are +inf
/// when that capacity is.
struct OuterTerms {
    std::array<double, 10> values{};

    double& operator[](std::size_t k) { return values[k - 1]; }  // 1-based, like i1..i10
    double operator[](std::size_t k) const { return values[k - 1]; }

    static RateConstraint direction(std::size_t k);
    static std::string name(std::size_t k);
};

OuterTerms outer_terms(const ChannelInstance& ch);

/// R1 <= i1, R2 <= i2, R1+R2 <= min(i3..i6), 2R1+R2 <= min(i7, i9),
/// R1+2R2 <= min(i8, i10), R >= 0.
RateRegion2D outer_region(const ChannelInstance& ch);
RateRegion2D outer_region_from_terms(const OuterTerms& t);

}  // namespace mimoic
