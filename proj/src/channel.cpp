// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/channel.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "mimoic/errors.hpp"
#include "mimoic/hermitian.hpp"
#include "mimoic/rng.hpp"

namespace mimoic {

namespace {

constexpr double kConditionWarning = 1e8;

CMatrix draw(CounterRng& rng, std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rng.next_cn01();
        }
    }
    return m;
}

void check_shape(const CMatrix& h, std::size_t rows, std::size_t cols, const char* name) {
    if (h.rows() != rows || h.cols() != cols) {
        std::ostringstream os;
        os << name << " is " << h.rows() << "x" << h.cols() << ", expected " << rows << "x" << cols;
        throw ShapeError(os.str());
    }
}

void check_finite_entries(const CMatrix& h, const char* name) {
    for (const auto& v : h.entries()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidSpec(std::string(name) + " has a non-finite entry");
        }
    }
}

void check_gain(double v, const char* name) {
    if (std::isnan(v)) {
        throw NegativeParameter(std::string(name) + " is NaN");
    }
    if (v < 0.0) {
        throw NegativeParameter(std::string(name) + " is negative");
    }
    if (!std::isfinite(v)) {
        throw InvalidSpec(std::string(name) + " must be finite");
    }
}

void check_backhaul(double v, const char* name) {
    if (std::isnan(v) || v < 0.0) {
        throw NegativeParameter(std::string(name) + " must be nonnegative");
    }
}

CMatrix real_matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values) {
    std::vector<cplx> e(values.begin(), values.end());
    return CMatrix(rows, cols, std::move(e));
}

}  // namespace

ChannelSeedSpec ChannelSeedSpec::from_exponents(std::size_t m1, std::size_t n1, std::size_t m2,
                                                std::size_t n2, double snr, double alpha,
                                                double beta, std::uint64_t seed) {
    ChannelSeedSpec s;
    s.m1 = m1;
    s.n1 = n1;
    s.m2 = m2;
    s.n2 = n2;
    s.rho11 = s.rho22 = snr;
    s.rho12 = s.rho21 = std::pow(snr, alpha);
    s.c12 = s.c21 = beta * std::log2(snr);
    s.seed = seed;
    return s;
}

ChannelInstance generate(const ChannelSeedSpec& spec) {
    if (spec.m1 == 0 || spec.n1 == 0 || spec.m2 == 0 || spec.n2 == 0) {
        throw InvalidSpec("antenna counts must be at least 1");
    }
    for (double v : {spec.rho11, spec.rho12, spec.rho21, spec.rho22}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidSpec("link gains must be finite and nonnegative");
        }
    }
    for (double v : {spec.c12, spec.c21}) {
        if (!(v >= 0.0)) {
            throw InvalidSpec("backhaul capacities must be nonnegative");
        }
    }
    CounterRng rng(spec.seed);
    ChannelInstance ch;
    ch.m1 = spec.m1;
    ch.n1 = spec.n1;
    ch.m2 = spec.m2;
    ch.n2 = spec.n2;
    ch.h11 = draw(rng, spec.n1, spec.m1);
    ch.h12 = draw(rng, spec.n2, spec.m1);
    ch.h21 = draw(rng, spec.n1, spec.m2);
    ch.h22 = draw(rng, spec.n2, spec.m2);
    ch.rho11 = spec.rho11;
    ch.rho12 = spec.rho12;
    ch.rho21 = spec.rho21;
    ch.rho22 = spec.rho22;
    ch.c12 = spec.c12;
    ch.c21 = spec.c21;
    return ch;
}

std::vector<std::string> validate(const ChannelInstance& ch) {
    if (ch.m1 == 0 || ch.n1 == 0 || ch.m2 == 0 || ch.n2 == 0) {
        throw ShapeError("antenna counts must be at least 1");
    }
    check_shape(ch.h11, ch.n1, ch.m1, "h11");
    check_shape(ch.h12, ch.n2, ch.m1, "h12");
    check_shape(ch.h21, ch.n1, ch.m2, "h21");
    check_shape(ch.h22, ch.n2, ch.m2, "h22");
    check_finite_entries(ch.h11, "h11");
    check_finite_entries(ch.h12, "h12");
    check_finite_entries(ch.h21, "h21");
    check_finite_entries(ch.h22, "h22");
    check_gain(ch.rho11, "rho11");
    check_gain(ch.rho12, "rho12");
    check_gain(ch.rho21, "rho21");
    check_gain(ch.rho22, "rho22");
    check_backhaul(ch.c12, "c12");
    check_backhaul(ch.c21, "c21");

    std::vector<std::string> warnings;
    const std::pair<const CMatrix*, const char*> mats[] = {
        {&ch.h11, "h11"}, {&ch.h12, "h12"}, {&ch.h21, "h21"}, {&ch.h22, "h22"}};
    for (const auto& [h, name] : mats) {
        const auto sv = singular_values(*h);
        const double smax = sv.front();
        const double smin = sv.back();
        if (smax == 0.0) {
            continue;  // all-zero link: interference-free, not ill-conditioned
        }
        if (smin == 0.0 || smax / smin > kConditionWarning) {
            std::ostringstream os;
            os << name << " is nearly rank deficient (condition number ";
            if (smin == 0.0) {
                os << "inf";
            } else {
                os << smax / smin;
            }
            os << ")";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

ChannelInstance siso_from_scalars(double snr1, double snr2, double inr1, double inr2, double c12,
                                  double c21) {
    ChannelInstance ch;
    ch.h11 = ch.h12 = ch.h21 = ch.h22 = CMatrix{{1.0}};
    ch.rho11 = snr1;
    ch.rho22 = snr2;
    ch.rho21 = inr1;
    ch.rho12 = inr2;
    ch.c12 = c12;
    ch.c21 = c21;
    check_gain(snr1, "snr1");
    check_gain(snr2, "snr2");
    check_gain(inr1, "inr1");
    check_gain(inr2, "inr2");
    check_backhaul(c12, "c12");
    check_backhaul(c21, "c21");
    return ch;
}

ChannelInstance swap_users(const ChannelInstance& ch) {
    ChannelInstance s;
    s.m1 = ch.m2;
    s.n1 = ch.n2;
    s.m2 = ch.m1;
    s.n2 = ch.n1;
    s.h11 = ch.h22;
    s.h22 = ch.h11;
    s.h12 = ch.h21;
    s.h21 = ch.h12;
    s.rho11 = ch.rho22;
    s.rho22 = ch.rho11;
    s.rho12 = ch.rho21;
    s.rho21 = ch.rho12;
    s.c12 = ch.c21;
    s.c21 = ch.c12;
    return s;
}

ChannelInstance with_backhaul(ChannelInstance ch, double c12, double c21) {
    ch.c12 = c12;
    ch.c21 = c21;
    return ch;
}

ChannelInstance mimo_reference_instance(double c12, double c21) {
    ChannelInstance ch;
    ch.m1 = 3;
    ch.n1 = 4;
    ch.m2 = 4;
    ch.n2 = 3;
    ch.h11 = real_matrix(4, 3, {0.3096, 0.1974, 0.1080,  //
                                0.3066, 0.4470, 0.3885,  //
                                0.3595, 0.6582, 0.9854,  //
                                0.4595, 0.6582, 0.4566});
    ch.h22 = real_matrix(3, 4, {0.9070, 0.6690, 0.6854, 0.6565,  //
                                0.6067, 0.9480, 0.6585, 0.6645,  //
                                0.4465, 0.6167, 0.6845, 0.3685});
    ch.h21 = real_matrix(4, 4, {0.8660, 0.9767, 0.4595, 0.6582,  //
                                0.8603, 0.5850, 0.6582, 0.9854,  //
                                0.3066, 0.4470, 0.6585, 0.3885,  //
                                0.3066, 0.6167, 0.4470, 0.3885});
    ch.h12 = real_matrix(3, 3, {0.1890, 0.7650, 0.3864,  //
                                0.6678, 0.2880, 0.3867,  //
                                0.4886, 0.7904, 0.2684});
    ch.rho11 = ch.rho12 = ch.rho21 = ch.rho22 = 1e8;
    ch.c12 = c12;
    ch.c21 = c21;
    return ch;
}

ChannelInstance siso_weak_instance() { return siso_from_scalars(5, 5, 2, 2, 1.1, 1.1); }
ChannelInstance siso_strong_instance() { return siso_from_scalars(1000, 1500, 4000, 10000, 11, 6); }
ChannelInstance siso_mixed_instance() { return siso_from_scalars(9000, 1500, 5000, 1000, 11, 6); }

}  // namespace mimoic
