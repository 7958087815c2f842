// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// AVX2/FMA variants. Compiled with per-function target attributes so the
// rest of the library stays baseline x86-64; dispatch happens in
// kernels_dispatch.cpp after a cpuid check.

#include "mimoic/simd_kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MIMOIC_HAVE_AVX2_TU 1
#include <immintrin.h>
#endif

namespace mimoic::simd {

#ifdef MIMOIC_HAVE_AVX2_TU
namespace {

#define MIMOIC_AVX2 __attribute__((target("avx2,fma")))

MIMOIC_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Lanes hold [re0, im0, re1, im1].
MIMOIC_AVX2 cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const auto* px = reinterpret_cast<const double*>(x);
    const auto* py = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * k);
        const __m256d vy = _mm256_loadu_pd(py + 2 * k);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0b0101), acc_im);
    }
    // acc_im lanes: [xr*yi, xi*yr, ...]; imaginary part is odd minus even.
    const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].imag() * y[k].real() - x[k].real() * y[k].imag();
    }
    return {re, im};
}

MIMOIC_AVX2 double norm2_avx2(const cplx* x, std::size_t n) {
    const auto* px = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d v = _mm256_loadu_pd(px + 2 * k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; k < n; ++k) {
        s += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return s;
}

// a*v for a broadcast complex a, two complex lanes at a time.
MIMOIC_AVX2 inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
    return _mm256_addsub_pd(_mm256_mul_pd(ar, v), _mm256_mul_pd(ai, _mm256_permute_pd(v, 0b0101)));
}

MIMOIC_AVX2 void axpy_avx2(cplx* y, cplx a, const cplx* x, std::size_t n) {
    auto* py = reinterpret_cast<double*>(y);
    const auto* px = reinterpret_cast<const double*>(x);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * k);
        const __m256d vy = _mm256_loadu_pd(py + 2 * k);
        _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(vy, cmul(ar, ai, vx)));
    }
    for (; k < n; ++k) {
        y[k] += a * x[k];
    }
}

MIMOIC_AVX2 void rotate_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx z) {
    auto* px = reinterpret_cast<double*>(x);
    auto* py = reinterpret_cast<double*>(y);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d zr = _mm256_set1_pd(z.real());
    const __m256d zi = _mm256_set1_pd(z.imag());
    const __m256d nzi = _mm256_set1_pd(-z.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * k);
        const __m256d vy = _mm256_loadu_pd(py + 2 * k);
        const __m256d zy = cmul(zr, zi, vy);
        const __m256d zx = cmul(zr, nzi, vx);
        _mm256_storeu_pd(px + 2 * k, _mm256_fmsub_pd(vc, vx, zy));
        _mm256_storeu_pd(py + 2 * k, _mm256_fmadd_pd(vc, vy, zx));
    }
    for (; k < n; ++k) {
        const cplx xk = x[k], yk = y[k];
        x[k] = c * xk - z * yk;
        y[k] = std::conj(z) * xk + c * yk;
    }
}

#undef MIMOIC_AVX2

}  // namespace

const KernelTable* avx2_kernels_or_null() {
    static const KernelTable table{"avx2", dot_conj_avx2, norm2_avx2, axpy_avx2, rotate_avx2};
    return &table;
}

#else

const KernelTable* avx2_kernels_or_null() { return nullptr; }

#endif

}  // namespace mimoic::simd
