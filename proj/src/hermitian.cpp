// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "mimoic/errors.hpp"
#include "mimoic/simd_kernels.hpp"

namespace mimoic {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kPsdTol = 1e-9;
constexpr int kMaxJacobiSweeps = 100;

void require_square(const CMatrix& a, const char* what) {
    if (!a.square()) {
        throw DimensionMismatch(std::string(what) + ": matrix is not square");
    }
}

// Solves L L^dagger X = B in place.
void cholesky_solve(const CMatrix& lower, CMatrix& b) {
    const std::size_t n = lower.rows();
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = b(i, col);
            for (std::size_t k = 0; k < i; ++k) {
                s -= lower(i, k) * b(k, col);
            }
            b(i, col) = s / lower(i, i).real();
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx s = b(ii, col);
            for (std::size_t k = ii + 1; k < n; ++k) {
                s -= std::conj(lower(k, ii)) * b(k, col);
            }
            b(ii, col) = s / lower(ii, ii).real();
        }
    }
}

CMatrix cholesky_or_throw(const HermitianMatrix& a, const char* what) {
    CMatrix lower;
    if (cholesky(a, lower)) {
        return lower;
    }
    const double jitter = 1e-12 * std::max(a.trace(), 0.0) / static_cast<double>(a.dim());
    if (cholesky(a + HermitianMatrix::identity(a.dim()).scaled(jitter), lower)) {
        return lower;
    }
    throw NotPositiveDefinite(std::string(what) + ": factorization failed after jitter");
}

}  // namespace

// ---------------------------------------------------------------------------

double hermitian_defect(const CMatrix& a) {
    require_square(a, "hermitian_defect");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

HermitianMatrix::HermitianMatrix(const CMatrix& a) {
    require_square(a, "HermitianMatrix");
    if (hermitian_defect(a) > kHermitianTol * (1.0 + a.max_abs())) {
        throw DimensionMismatch("HermitianMatrix: input is not Hermitian");
    }
    *this = symmetrized(a);
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& a) {
    require_square(a, "HermitianMatrix::symmetrized");
    HermitianMatrix h;
    h.m_ = CMatrix(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        h.m_(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h.m_(i, j) = v;
            h.m_(j, i) = std::conj(v);
        }
    }
    return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) { return symmetrized(CMatrix::identity(n)); }

HermitianMatrix HermitianMatrix::zeros(std::size_t n) { return symmetrized(CMatrix(n, n)); }

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        t += m_(i, i).real();
    }
    return t;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix out;
    out.m_ = a.m_ + b.m_;
    return out;
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix out;
    out.m_ = a.m_ - b.m_;
    return out;
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
    HermitianMatrix out;
    out.m_ = m_.scaled(s);
    return out;
}

// ---------------------------------------------------------------------------

bool cholesky(const HermitianMatrix& a, CMatrix& lower) {
    const std::size_t n = a.dim();
    lower = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            d -= std::norm(lower(j, k));
        }
        if (!(d > 0.0) || !std::isfinite(d)) {
            return false;
        }
        const double ljj = std::sqrt(d);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= lower(i, k) * std::conj(lower(j, k));
            }
            lower(i, j) = s / ljj;
        }
    }
    return true;
}

double logdet2_hpd(const HermitianMatrix& a) {
    const CMatrix lower = cholesky_or_throw(a, "logdet2_hpd");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::log2(lower(i, i).real());
    }
    return 2.0 * s;
}

HermitianMatrix hpd_inverse(const HermitianMatrix& a) {
    const CMatrix lower = cholesky_or_throw(a, "hpd_inverse");
    CMatrix x = CMatrix::identity(a.dim());
    cholesky_solve(lower, x);
    return HermitianMatrix::symmetrized(x);
}

HermitianMatrix gram(const CMatrix& s, double scale) {
    return HermitianMatrix::symmetrized(mul_adj(s, s).scaled(scale));
}

HermitianMatrix schur_capped(const HermitianMatrix& k, const CMatrix& s) {
    if (s.rows() != k.dim()) {
        throw DimensionMismatch("schur_capped: K is " + std::to_string(k.dim()) + "x" +
                                std::to_string(k.dim()) + " but S has " + std::to_string(s.rows()) +
                                " rows");
    }
    const CMatrix ks = k.matrix() * s;                     // M x N
    const HermitianMatrix inner = HermitianMatrix::identity(s.cols()) +
                                  HermitianMatrix::symmetrized(s.adjoint() * ks);
    const CMatrix lower = cholesky_or_throw(inner, "schur_capped");
    CMatrix t = ks.adjoint();  // N x M
    cholesky_solve(lower, t);  // (I + S^dagger K S)^{-1} S^dagger K
    return HermitianMatrix::symmetrized(k.matrix() - ks * t);
}

std::pair<double, double> block_logdet_check(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                                             const CMatrix& d) {
    require_square(a, "block_logdet_check(A)");
    require_square(d, "block_logdet_check(D)");
    if (b.rows() != a.rows() || c.cols() != a.cols() || b.cols() != d.cols() || c.rows() != d.rows()) {
        throw DimensionMismatch("block_logdet_check: blocks are not conformable");
    }
    const HermitianMatrix full(block(a, b, c, d));
    const HermitianMatrix ha(a);
    const CMatrix lower = cholesky_or_throw(ha, "block_logdet_check(A)");
    CMatrix ainv_b = b;
    cholesky_solve(lower, ainv_b);
    const HermitianMatrix schur = HermitianMatrix::symmetrized(d - c * ainv_b);
    return {logdet2_hpd(full), logdet2_hpd(ha) + logdet2_hpd(schur)};
}

double resolvent_identity_check(const CMatrix& h, double rho) {
    require_square(h, "resolvent_identity_check");
    const std::size_t n = h.rows();
    const HermitianMatrix outer = HermitianMatrix::identity(n) + gram(h, rho);
    const HermitianMatrix inner = HermitianMatrix::identity(n) + gram(h.adjoint(), rho);
    try {
        const CMatrix lhs =
            CMatrix::identity(n) - (h.adjoint() * hpd_inverse(outer).matrix() * h).scaled(rho);
        const CMatrix rhs = hpd_inverse(inner).matrix();
        return max_abs_diff(lhs, rhs);
    } catch (const NotPositiveDefinite&) {
        return std::numeric_limits<double>::infinity();
    }
}

// ---------------------------------------------------------------------------

std::vector<double> eigenvalues(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    CMatrix a = h.matrix();
    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += std::norm(a(i, i));
            for (std::size_t j = i + 1; j < n; ++j) {
                off += std::norm(a(i, j));
            }
        }
        if (off <= 1e-32 * diag || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase q so the (p,q) entry becomes real, then a real rotation.
                const cplx phase = apq / mag;  // e^{i phi}
                for (std::size_t k = 0; k < n; ++k) {
                    a(k, q) *= std::conj(phase);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    a(q, k) *= phase;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = a(i, i).real();
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

bool psd_check(const HermitianMatrix& a) {
    const auto ev = eigenvalues(a);
    if (ev.empty()) {
        return true;
    }
    const double norm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return ev.front() >= -kPsdTol * (1.0 + norm);
}

bool psd_check(const HermitianMatrix& a, const HermitianMatrix& upper) {
    if (a.dim() != upper.dim()) {
        throw DimensionMismatch("psd_check: upper bound has a different dimension");
    }
    return psd_check(a) && psd_check(upper - a);
}

// ---------------------------------------------------------------------------

CMatrix row_orthogonalize(CMatrix w) {
    const auto& k = simd::kernels();
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();
    if (m < 2 || n == 0) {
        return w;
    }
    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                cplx* x = w.row(p).data();
                cplx* y = w.row(q).data();
                const double alpha = k.norm2(x, n);
                const double beta = k.norm2(y, n);
                const cplx gamma = k.dot_conj(x, y, n);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx z = (c * t) * (gamma / g);
                k.rotate(x, y, n, c, z);
            }
        }
        if (!rotated) {
            break;
        }
    }
    return w;
}

std::vector<double> singular_values(const CMatrix& w) {
    const CMatrix r = row_orthogonalize(w.rows() > w.cols() ? w.adjoint() : w);
    const auto& k = simd::kernels();
    std::vector<double> sv(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        sv[i] = std::sqrt(k.norm2(r.row(i).data(), r.cols()));
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double logdet2_identity_plus_gram(const CMatrix& w) {
    if (w.rows() == 0 || w.cols() == 0) {
        return 0.0;
    }
    const CMatrix r = row_orthogonalize(w.rows() > w.cols() ? w.adjoint() : w);
    const auto& k = simd::kernels();
    double s = 0.0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        s += std::log1p(k.norm2(r.row(i).data(), r.cols()));
    }
    return s / std::numbers::ln2;
}

ComplementaryFactors resolvent_split(const CMatrix& g) {
    const std::size_t m = g.cols();
    const CMatrix r = row_orthogonalize(g);
    const auto& k = simd::kernels();
    std::vector<double> s(r.rows());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        s[i] = k.norm2(r.row(i).data(), m);
        nonzero += s[i] > 0.0 ? 1 : 0;
    }
    CMatrix comp(m, r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        const double root = std::sqrt(1.0 + s[i]);
        for (std::size_t a = 0; a < m; ++a) {
            comp(a, i) = std::conj(r(i, a)) / root;
        }
    }

    CMatrix p;
    if (nonzero == m) {
        // Rows span C^m: P^{1/2} = sum_i u_i u_i^dagger / sqrt(1 + s_i) with no
        // identity term to cancel against at large s_i.
        p = CMatrix(m, m);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (s[i] == 0.0) {
                continue;
            }
            const cplx* ri = r.row(i).data();
            const double w = 1.0 / (s[i] * std::sqrt(1.0 + s[i]));
            for (std::size_t a = 0; a < m; ++a) {
                k.axpy(p.row(a).data(), w * std::conj(ri[a]), ri, m);
            }
        }
    } else {
        p = CMatrix::identity(m);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            const cplx* ri = r.row(i).data();
            const double root = std::sqrt(1.0 + s[i]);
            // (1 - 1/sqrt(1+s)) / s without cancellation.
            const double f = 1.0 / (root * (1.0 + root));
            for (std::size_t a = 0; a < m; ++a) {
                k.axpy(p.row(a).data(), -f * std::conj(ri[a]), ri, m);
            }
        }
    }
    return {std::move(p), std::move(comp)};
}

CMatrix resolvent_factor(const CMatrix& g1, const CMatrix& g2) {
    if (g1.cols() != g2.cols()) {
        throw DimensionMismatch("resolvent_factor: column counts differ");
    }
    return g1 * resolvent_split(g2).p_factor;
}

}  // namespace mimoic
