// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/simd_kernels.hpp"

namespace mimoic::simd {
namespace {

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        re += xr * yr + xi * yi;
        im += xi * yr - xr * yi;
    }
    return {re, im};
}

double norm2_scalar(const cplx* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return s;
}

void axpy_scalar(cplx* y, cplx a, const cplx* x, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        y[k] = {y[k].real() + ar * xr - ai * xi, y[k].imag() + ar * xi + ai * xr};
    }
}

void rotate_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx z) {
    const double zr = z.real(), zi = z.imag();
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        // z*y and conj(z)*x
        const double zyr = zr * yr - zi * yi, zyi = zr * yi + zi * yr;
        const double zxr = zr * xr + zi * xi, zxi = zr * xi - zi * xr;
        x[k] = {c * xr - zyr, c * xi - zyi};
        y[k] = {zxr + c * yr, zxi + c * yi};
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", dot_conj_scalar, norm2_scalar, axpy_scalar,
                                   rotate_scalar};
    return table;
}

}  // namespace mimoic::simd
