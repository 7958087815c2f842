// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Hermitian linear algebra behind every bound evaluation. Logarithms are
// base 2 throughout, so log-dets come out in bits.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mimoic/cmatrix.hpp"

namespace mimoic {

/// Square complex matrix with A = A^dagger, stored symmetrized.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    /// Accepts a matrix that is Hermitian to within 1e-12 (1 + max|a_ij|)
    /// and stores (A + A^dagger) / 2. Throws DimensionMismatch otherwise.
    explicit HermitianMatrix(const CMatrix& a);

    /// Symmetrizes without the tolerance check; for products that are
    /// Hermitian in exact arithmetic.
    static HermitianMatrix symmetrized(const CMatrix& a);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix zeros(std::size_t n);

    std::size_t dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    double trace() const;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    HermitianMatrix scaled(double s) const;

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    CMatrix m_;
};

/// Max_{ij} |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix& a);

/// Lower-triangular L with A = L L^dagger. Returns false when a pivot is not
/// strictly positive.
bool cholesky(const HermitianMatrix& a, CMatrix& lower);

/// log2 det A for Hermitian positive definite A. One retry with jitter
/// 1e-12 * trace/dim * I; throws NotPositiveDefinite after that.
double logdet2_hpd(const HermitianMatrix& a);

/// A^{-1} for Hermitian positive definite A (Cholesky based).
HermitianMatrix hpd_inverse(const HermitianMatrix& a);

/// scale * S S^dagger.
HermitianMatrix gram(const CMatrix& s, double scale);

/// L(K, S) = K - K S (I + S^dagger K S)^{-1} S^dagger K.
HermitianMatrix schur_capped(const HermitianMatrix& k, const CMatrix& s);

/// Log-det of the assembled block matrix [[A, B], [C, D]] and
/// log2 det A + log2 det(D - C A^{-1} B). Hermitian blocks expected (B = C^dagger).
std::pair<double, double> block_logdet_check(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                                             const CMatrix& d);

/// Max-entry |(I - rho H^dagger (I + rho H H^dagger)^{-1} H) - (I + rho H^dagger H)^{-1}|.
double resolvent_identity_check(const CMatrix& h, double rho);

/// Eigenvalues (ascending) by cyclic Jacobi.
std::vector<double> eigenvalues(const HermitianMatrix& a);

/// min eig(A) >= -1e-9 (1 + ||A||).
bool psd_check(const HermitianMatrix& a);
/// psd_check(a) and min eig(upper - A) >= -1e-9 (1 + ||upper - A||).
bool psd_check(const HermitianMatrix& a, const HermitianMatrix& upper);

// ---------------------------------------------------------------------------
// Factored forms. Every rate expression in this library is a log-det of
// I + W W^dagger for some product W of scaled channel matrices; keeping W
// instead of the Gram matrix avoids rounding I + rho H H^dagger at large rho.

/// Applies a unitary from the left until the rows of W are mutually
/// orthogonal (one-sided Jacobi). Row norms are the singular values.
CMatrix row_orthogonalize(CMatrix w);

/// Singular values of W, descending.
std::vector<double> singular_values(const CMatrix& w);

/// log2 det(I + W W^dagger).
double logdet2_identity_plus_gram(const CMatrix& w);

/// W' with W' W'^dagger = G1 (I + G2^dagger G2)^{-1} G1^dagger.
/// G1 and G2 must have the same column count.
CMatrix resolvent_factor(const CMatrix& g1, const CMatrix& g2);

/// Square-root factors of P = (I + G^dagger G)^{-1} and I - P, i.e.
/// P = A A^dagger and I - P = B B^dagger.
struct ComplementaryFactors {
    CMatrix p_factor;
    CMatrix complement_factor;
};
ComplementaryFactors resolvent_split(const CMatrix& g);

}  // namespace mimoic
