// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mimoic/simd_kernels.hpp"

namespace mimoic::simd {

const KernelTable* avx2_kernels_or_null();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    static const bool has = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return has;
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("MIMOIC_SIMD"); env != nullptr && std::string(env) == "scalar") {
        return Backend::scalar;
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& active() {
    static std::atomic<Backend> b{initial_backend()};
    return b;
}

std::atomic<const KernelTable*>& active_table() {
    static std::atomic<const KernelTable*> t{&kernels_for(active().load())};
    return t;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return avx2_kernels_or_null() != nullptr && cpu_has_avx2();
    }
    return false;
}

const KernelTable& kernels_for(Backend b) {
    if (!backend_available(b)) {
        throw std::runtime_error("kernel backend not available: " + std::string(backend_name(b)));
    }
    return b == Backend::avx2 ? *avx2_kernels_or_null() : scalar_kernels();
}

const KernelTable& kernels() { return *active_table().load(std::memory_order_relaxed); }

Backend active_backend() { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    const KernelTable& t = kernels_for(b);
    active().store(b, std::memory_order_relaxed);
    active_table().store(&t, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

}  // namespace mimoic::simd
