// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Dense complex matrices at the sizes this library deals with (a few
// antennas per node, block assemblies up to 16x16).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mimoic {

using cplx = std::complex<double>;

/// Row-major dense complex matrix. Empty (0x0) only when default-constructed.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    const std::vector<cplx>& entries() const { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix scaled(double s) const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);

    /// Largest entry modulus.
    double max_abs() const;

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// a * b^dagger without forming the adjoint.
CMatrix mul_adj(const CMatrix& a, const CMatrix& b);

/// [a b]
CMatrix hstack(const CMatrix& a, const CMatrix& b);
/// [a; b]
CMatrix vstack(const CMatrix& a, const CMatrix& b);
/// [[a, b], [c, d]]
CMatrix block(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d);

/// Max-entry absolute difference; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace mimoic
