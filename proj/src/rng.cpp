// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/rng.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace mimoic {

std::uint64_t CounterRng::word(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::next_uniform_open0() {
    return static_cast<double>((next_word() >> 11) + 1) * 0x1.0p-53;
}

double CounterRng::next_uniform() { return static_cast<double>(next_word() >> 11) * 0x1.0p-53; }

std::pair<double, double> CounterRng::next_normal_pair() {
    const double u1 = next_uniform_open0();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::complex<double> CounterRng::next_cn01() {
    const auto [a, b] = next_normal_pair();
    return {a * std::numbers::sqrt2 / 2.0, b * std::numbers::sqrt2 / 2.0};
}

}  // namespace mimoic
