// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/outer.hpp"

#include <algorithm>
#include <cmath>

#include "mimoic/errors.hpp"
#include "mimoic/hermitian.hpp"

namespace mimoic {

namespace {

double logdet(const CMatrix& w) { return logdet2_identity_plus_gram(w); }

}  // namespace

RateConstraint OuterTerms::direction(std::size_t k) {
    switch (k) {
        case 1: return {1.0, 0.0, 0.0};
        case 2: return {0.0, 1.0, 0.0};
        case 3:
        case 4:
        case 5:
        case 6: return {1.0, 1.0, 0.0};
        case 7:
        case 9: return {2.0, 1.0, 0.0};
        case 8:
        case 10: return {1.0, 2.0, 0.0};
        default: throw InvalidSpec("outer term index out of range");
    }
}

std::string OuterTerms::name(std::size_t k) {
    if (k < 1 || k > 10) {
        throw InvalidSpec("outer term index out of range");
    }
    return "i" + std::to_string(k);
}

OuterTerms outer_terms(const ChannelInstance& ch) {
    validate(ch);
    // Scaled links; every term below is log2 det(I + W W^dagger) of a product
    // of these, with resolvent_factor supplying the (I + G^dagger G)^{-1/2} parts.
    const CMatrix d1 = ch.h11.scaled(std::sqrt(ch.rho11));
    const CMatrix x12 = ch.h12.scaled(std::sqrt(ch.rho12));
    const CMatrix x21 = ch.h21.scaled(std::sqrt(ch.rho21));
    const CMatrix d2 = ch.h22.scaled(std::sqrt(ch.rho22));

    // Interference at receiver j after the direct signal at receiver i is
    // whitened away.
    const CMatrix leak1 = resolvent_factor(x12, d1);   // n2 x m1
    const CMatrix leak2 = resolvent_factor(x21, d2);   // n1 x m2
    // Direct signal at receiver i seen through the interference it causes.
    const CMatrix priv1 = resolvent_factor(d1, x12);   // n1 x m1
    const CMatrix priv2 = resolvent_factor(d2, x21);   // n2 x m2

    const double rx1_full = logdet(hstack(d1, x21));
    const double rx2_full = logdet(hstack(d2, x12));
    const double priv1_ld = logdet(priv1);
    const double priv2_ld = logdet(priv2);
    const double mix1 = logdet(hstack(x21, priv1));
    const double mix2 = logdet(hstack(x12, priv2));

    OuterTerms t;
    t[1] = logdet(d1) + std::min(logdet(leak1), ch.c21);
    t[2] = logdet(d2) + std::min(logdet(leak2), ch.c12);
    t[3] = mix1 + mix2 + ch.c12 + ch.c21;
    t[4] = priv1_ld + rx2_full + ch.c12;
    t[5] = priv2_ld + rx1_full + ch.c21;
    t[6] = logdet(hstack(vstack(d1, x12), vstack(x21, d2)));
    t[7] = priv1_ld + mix2 + rx1_full + ch.c12 + ch.c21;
    t[8] = priv2_ld + mix1 + rx2_full + ch.c12 + ch.c21;
    t[9] = logdet(hstack(resolvent_factor(vstack(d2, x21), x21), vstack(x12, d1))) + rx1_full +
           ch.c21;
    t[10] = logdet(hstack(resolvent_factor(vstack(d1, x12), x12), vstack(x21, d2))) + rx2_full +
            ch.c12;
    return t;
}

RateRegion2D outer_region_from_terms(const OuterTerms& t) {
    return region_from_constraints({
        {1.0, 0.0, t[1]},
        {0.0, 1.0, t[2]},
        {1.0, 1.0, std::min({t[3], t[4], t[5], t[6]})},
        {2.0, 1.0, std::min(t[7], t[9])},
        {1.0, 2.0, std::min(t[8], t[10])},
    });
}

RateRegion2D outer_region(const ChannelInstance& ch) {
    return outer_region_from_terms(outer_terms(ch));
}

}  // namespace mimoic
