// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Counter-based generator so fixtures are reproducible across platforms
// and languages: word(seed, i) = splitmix64_finalize(seed + (i + 1) * golden).
// Normal variates use Box-Muller on two consecutive 53-bit uniforms.

#pragma once

#include <complex>
#include <cstdint>

namespace mimoic {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// The i-th raw 64-bit word for this seed.
    static std::uint64_t word(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_word() { return word(seed_, counter_++); }

    /// Uniform on (0, 1].
    double next_uniform_open0();
    /// Uniform on [0, 1).
    double next_uniform();

    /// Standard normal pair from one Box-Muller draw.
    std::pair<double, double> next_normal_pair();

    /// CN(0, 1): real and imaginary parts N(0, 1/2).
    std::complex<double> next_cn01();

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace mimoic
