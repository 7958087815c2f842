// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <vector>

#include "mimoic/hermitian.hpp"
#include "mimoic/simd_kernels.hpp"
#include "test_support.hpp"

using namespace mimoic;

namespace {

std::vector<cplx> random_vec(CounterRng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& x : v) x = rng.next_cn01();
    return v;
}

class AvxEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        if (!simd::backend_available(simd::Backend::avx2)) {
            GTEST_SKIP() << "AVX2 not available on this host";
        }
    }
    const simd::KernelTable& s = simd::kernels_for(simd::Backend::scalar);
    const simd::KernelTable& v = simd::kernels_for(simd::Backend::avx2);
};

// Restores the dispatched backend after a test forces one.
struct BackendGuard {
    simd::Backend saved = simd::active_backend();
    ~BackendGuard() { simd::set_backend(saved); }
};

}  // namespace

TEST(Kernels, ScalarMatchesNaiveLoops) {
    CounterRng rng(11);
    const auto& k = simd::scalar_kernels();
    for (std::size_t n : {0u, 1u, 3u, 8u, 17u}) {
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        cplx dot = 0.0;
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot += x[i] * std::conj(y[i]);
            nn += std::norm(x[i]);
        }
        EXPECT_NEAR(std::abs(k.dot_conj(x.data(), y.data(), n) - dot), 0.0, 1e-13);
        EXPECT_NEAR(k.norm2(x.data(), n), nn, 1e-13);
    }
}

TEST(Kernels, RotationIsUnitary) {
    CounterRng rng(12);
    const auto& k = simd::scalar_kernels();
    auto x = random_vec(rng, 9);
    auto y = random_vec(rng, 9);
    const double before = k.norm2(x.data(), 9) + k.norm2(y.data(), 9);
    const double c = 0.6;
    const cplx z = std::polar(0.8, 0.3);
    k.rotate(x.data(), y.data(), 9, c, z);
    EXPECT_NEAR(k.norm2(x.data(), 9) + k.norm2(y.data(), 9), before, 1e-12);
}

TEST_F(AvxEquivalence, DotNormAxpyRotate) {
    CounterRng rng(13);
    for (std::size_t n = 0; n <= 37; ++n) {
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        const double scale = 1.0 + n;
        EXPECT_LE(std::abs(s.dot_conj(x.data(), y.data(), n) - v.dot_conj(x.data(), y.data(), n)),
                  1e-14 * scale);
        EXPECT_LE(std::abs(s.norm2(x.data(), n) - v.norm2(x.data(), n)), 1e-14 * scale);

        const cplx a(0.3, -1.2);
        auto y1 = y;
        auto y2 = y;
        s.axpy(y1.data(), a, x.data(), n);
        v.axpy(y2.data(), a, x.data(), n);
        for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(y1[i] - y2[i]), 1e-14);

        auto x1 = x, x2 = x, z1 = y, z2 = y;
        const double c = 0.8;
        const cplx z = std::polar(0.6, -0.7);
        s.rotate(x1.data(), z1.data(), n, c, z);
        v.rotate(x2.data(), z2.data(), n, c, z);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LE(std::abs(x1[i] - x2[i]), 1e-14);
            EXPECT_LE(std::abs(z1[i] - z2[i]), 1e-14);
        }
    }
}

TEST_F(AvxEquivalence, LogdetAgreesAcrossBackends) {
    BackendGuard guard;
    CounterRng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 7;
        const CMatrix w = oracle::scale(oracle::random_matrix(rng, r, c), 1e3);
        simd::set_backend(simd::Backend::scalar);
        const double ls = logdet2_identity_plus_gram(w);
        simd::set_backend(simd::Backend::avx2);
        const double lv = logdet2_identity_plus_gram(w);
        EXPECT_NEAR(ls, lv, 1e-10 * (1.0 + std::abs(ls)));
    }
}

TEST(Kernels, BackendNames) {
    EXPECT_EQ(simd::backend_name(simd::Backend::scalar), "scalar");
    EXPECT_EQ(simd::backend_name(simd::Backend::avx2), "avx2");
    EXPECT_TRUE(simd::backend_available(simd::Backend::scalar));
}
