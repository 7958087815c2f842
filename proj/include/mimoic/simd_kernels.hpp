// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Inner loops of the dense complex kernels. A scalar reference table is
// always present; an AVX2/FMA table is compiled on x86-64 and picked at
// runtime when the CPU reports both features. All vectors are contiguous
// interleaved std::complex<double>.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace mimoic::simd {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;
    /// sum_k x[k] * conj(y[k])
    cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);
    /// sum_k |x[k]|^2
    double (*norm2)(const cplx* x, std::size_t n);
    /// y += a * x
    void (*axpy)(cplx* y, cplx a, const cplx* x, std::size_t n);
    /// Plane rotation of two rows: x <- c x - z y, y <- conj(z) x + c y.
    /// Unitary when c^2 + |z|^2 = 1.
    void (*rotate)(cplx* x, cplx* y, std::size_t n, double c, cplx z);
};

enum class Backend { scalar, avx2 };

const KernelTable& scalar_kernels();

/// Throws std::runtime_error when the backend is not compiled in or the CPU
/// lacks the instructions.
const KernelTable& kernels_for(Backend b);

bool backend_available(Backend b);

/// Active table. Defaults to the best available backend; MIMOIC_SIMD=scalar
/// in the environment pins the reference path.
const KernelTable& kernels();

Backend active_backend();
void set_backend(Backend b);

std::string_view backend_name(Backend b);

}  // namespace mimoic::simd
