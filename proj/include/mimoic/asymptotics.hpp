// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// High-SNR characterizations. DoF: every link scales like SNR and the
// backhauls like beta_ij * log2 SNR. GDoF: equal antenna count m at all
// nodes, direct links ~ SNR, cross links ~ SNR^alpha, both backhauls
// beta * log2 SNR. All formulas below are closed forms on real numbers;
// empirical_slope is the matrix-based cross-check.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mimoic/region.hpp"

namespace mimoic {

struct DofSpec {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    double beta12 = 0.0, beta21 = 0.0;
};

struct GdofSpec {
    std::size_t m = 1;
    double alpha = 0.0;
    double beta = 0.0;
};

using DofRegion = RateRegion2D;

/// Right-hand sides of the ten DoF constraints, in the order of the outer
/// terms i1..i10 they come from (directions as in OuterTerms).
std::array<double, 10> dof_bounds(const DofSpec& s);
DofRegion dof_region(const DofSpec& s);

/// Largest d with (d, d) in the symmetric DoF region (m1 = m2 = m, n1 = n2 = n).
double symmetric_dof_value(std::size_t m, std::size_t n, double beta);

/// Backhaul exponent beyond which the symmetric DoF region stops growing:
/// min{n, (2m - n)^+}.
double coop_saturation_beta(std::size_t m, std::size_t n);

/// GDoF prelogs of the outer terms i1..i10 (i4/i5, i7/i8 and i9/i10 pairs
/// coincide by symmetry).
std::array<double, 10> gdof_bounds(const GdofSpec& s);
DofRegion gdof_region(const GdofSpec& s);

/// Symmetric GDoF: minimum of six closed-form expressions.
double gdof_value(const GdofSpec& s);

/// Symmetric GDoF from the three beta-regime piecewise tables. Where alpha
/// sits on a branch boundary every matching branch is evaluated; they must
/// agree to 1e-12 (throws Error otherwise).
double gdof_piecewise(const GdofSpec& s);

/// Symmetric GDoF without cooperation (the W-curve).
double gdof_nrc(std::size_t m, double alpha);

std::vector<std::pair<double, double>> gdof_curve(std::size_t m, double beta,
                                                  const std::vector<double>& alpha_grid);

/// alpha grid lo, lo + step, ... up to hi (inclusive, 1e-9 step slack),
/// computed as lo + k * step to avoid drift.
std::vector<double> alpha_grid(double lo, double hi, double step);

/// "alpha,gdof" CSV with 12 significant digits.
std::string curve_csv(const std::vector<std::pair<double, double>>& curve);

struct SlopeEstimate {
    std::string term;
    double predicted = 0.0;
    double estimated = 0.0;
    double abs_err = 0.0;
};

struct SlopeSweep {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    std::uint64_t seed = 0;
    double alpha = 1.0;
    double beta = 0.0;
    std::vector<double> snr;
};

/// Predicted prelog of each outer term: the GDoF forms when all antenna
/// counts are equal, the DoF forms (alpha = 1) otherwise.
std::array<double, 10> predicted_prelogs(const SlopeSweep& sweep);

/// Least-squares slope of each outer term against log2 SNR over the top
/// half of the sweep. One channel draw (from the seed) is reused at every
/// SNR. Throws IllConditionedSweep when the sweep spans fewer than 4
/// decades or an evaluation fails; InvalidSpec for alpha != 1 with unequal
/// antenna counts.
std::vector<SlopeEstimate> empirical_slope(const SlopeSweep& sweep);

}  // namespace mimoic
