// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mimoic/errors.hpp"
#include "mimoic/simd_kernels.hpp"

namespace mimoic {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("CMatrix: entry count does not match shape");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

CMatrix CMatrix::scaled(double s) const {
    CMatrix out = *this;
    for (auto& v : out.data_) {
        v *= s;
    }
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require_same_shape(*this, o, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require_same_shape(*this, o, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix mul_adj(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("mul_adj: inner dimensions differ");
    }
    const auto& k = simd::kernels();
    CMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ri = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            out(i, j) = k.dot_conj(ri.data(), b.row(j).data(), a.cols());
        }
    }
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("operator*: inner dimensions differ");
    }
    // a * b = a * (b^dagger)^dagger
    return mul_adj(a, b.adjoint());
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("hstack: row counts differ");
    }
    CMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
        std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + a.cols());
    }
    return out;
}

CMatrix vstack(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("vstack: column counts differ");
    }
    std::vector<cplx> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return CMatrix(a.rows() + b.rows(), a.cols(), std::move(e));
}

CMatrix block(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

}  // namespace mimoic
