// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "mimoic/achievability.hpp"
#include "mimoic/asymptotics.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/hermitian.hpp"
#include "mimoic/outer.hpp"
#include "mimoic/region.hpp"
#include "mimoic/rng.hpp"

namespace mimoic {

namespace {

constexpr double kXiTol = 1e-9;
constexpr double kSandwichTol = 1e-6;
constexpr double kBlockTol = 1e-10;
constexpr double kSlopeTol = 0.05;

enum Prop : std::size_t {
    kXiBound,
    kXiBoundary,
    kSplitValid,
    kBlockLogdet,
    kSchurMonotone,
    kResolvent,
    kErodedInGuaranteed,
    kGuaranteedInCombined,
    kCombinedInOuter,
    kOuterMonotone,
    kSlopes,
    kPropCount,
};

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    double worst = 0.0;
    std::string first_failure;

    void record(bool ok, double violation, const std::string& what) {
        ++checked;
        worst = std::max(worst, violation);
        if (!ok) {
            if (failed == 0) {
                first_failure = what;
            }
            ++failed;
        }
    }
};

using TrialTallies = std::array<Tally, kPropCount>;

CMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rng.next_cn01();
        }
    }
    return m;
}

std::size_t draw_count(CounterRng& rng, std::size_t max) {
    return 1 + static_cast<std::size_t>(rng.next_word() % max);
}

std::string trial_label(std::uint64_t index, const std::string& detail) {
    std::ostringstream os;
    os << "trial " << index << ": " << detail;
    return os.str();
}

bool wanted(const ValidationOptions& opts, Prop p) {
    return opts.only.empty() ||
           std::find(opts.only.begin(), opts.only.end(), property_names()[p]) != opts.only.end();
}

void check_channel_properties(const ValidationOptions& opts, std::uint64_t index,
                              TrialTallies& t) {
    const ChannelInstance ch = corpus_channel(opts.corpus, index);
    const double fault = opts.inject_fault ? 1.0 : 0.0;

    if (wanted(opts, kXiBound) || wanted(opts, kSplitValid)) {
        const CovarianceSplit split = covariance_split(ch);
        if (wanted(opts, kSplitValid)) {
            const SplitCheck sc = check_split(ch, split);
            t[kSplitValid].record(sc.ok(), std::max(0.0, sc.max_interference_eigenvalue - 1.0),
                                  trial_label(index, "covariance split invariant violated"));
        }
        if (wanted(opts, kXiBound)) {
            for (auto order : {StrategyOrder::two_one_two, StrategyOrder::one_two_one}) {
                const double xi = quantization_plan(ch, split, order).xi + fault;
                const double cap =
                    static_cast<double>(order == StrategyOrder::two_one_two ? ch.n2 : ch.n1);
                t[kXiBound].record(xi <= cap + kXiTol && xi >= -kXiTol, std::max(0.0, xi - cap),
                                   trial_label(index, std::string("xi above antenna count, order ") +
                                                          order_name(order)));
            }
        }
    }
    if (wanted(opts, kXiBoundary)) {
        ChannelInstance quiet = ch;
        quiet.rho21 = 0.0;
        const double xi =
            quantization_plan(quiet, covariance_split(quiet), StrategyOrder::two_one_two).xi +
            fault;
        const double err = std::abs(xi - static_cast<double>(ch.n2));
        t[kXiBoundary].record(err <= kXiTol, err,
                              trial_label(index, "xi != N2 with no cross observation"));
    }

    const bool sandwich = wanted(opts, kErodedInGuaranteed) || wanted(opts, kGuaranteedInCombined) ||
                          wanted(opts, kCombinedInOuter);
    if (sandwich || wanted(opts, kOuterMonotone)) {
        const OuterTerms terms = outer_terms(ch);
        const RateRegion2D outer = outer_region_from_terms(terms);
        if (sandwich) {
            const RateRegion2D inner = guaranteed_inner_from_terms(terms, ch.n1, ch.n2);
            const double g = static_cast<double>(ch.n1 + ch.n2);
            if (wanted(opts, kErodedInGuaranteed)) {
                const RateRegion2D eroded = erode_by_box(outer, g, g);
                t[kErodedInGuaranteed].record(is_subset(eroded, inner, kSandwichTol),
                                              max_gap(eroded, inner),
                                              trial_label(index, "eroded outer not in guaranteed"));
            }
            if (wanted(opts, kGuaranteedInCombined) || wanted(opts, kCombinedInOuter)) {
                const RateRegion2D ach = combined_achievable(ch);
                if (wanted(opts, kGuaranteedInCombined)) {
                    t[kGuaranteedInCombined].record(
                        is_subset(inner, ach, kSandwichTol), max_gap(inner, ach),
                        trial_label(index, "guaranteed region not in combined achievable"));
                }
                if (wanted(opts, kCombinedInOuter)) {
                    t[kCombinedInOuter].record(is_subset(ach, outer, kSandwichTol),
                                               max_gap(ach, outer),
                                               trial_label(index, "achievable not in outer"));
                }
            }
        }
        if (wanted(opts, kOuterMonotone)) {
            CounterRng rng(CounterRng::word(opts.corpus.seed ^ 0x6d6f6e6fULL, index));
            const ChannelInstance more = with_backhaul(ch, ch.c12 + 5.0 * rng.next_uniform(),
                                                       ch.c21 + 5.0 * rng.next_uniform());
            const RateRegion2D bigger = outer_region(more);
            t[kOuterMonotone].record(is_subset(outer, bigger, kSandwichTol),
                                     max_gap(outer, bigger),
                                     trial_label(index, "outer region shrank with more backhaul"));
        }
    }
}

void check_matrix_lemmas(const ValidationOptions& opts, std::uint64_t index, TrialTallies& t) {
    CounterRng rng(CounterRng::word(opts.corpus.seed ^ 0x6c656d6d61ULL, index));
    if (wanted(opts, kBlockLogdet)) {
        const std::size_t p = draw_count(rng, 4);
        const std::size_t q = draw_count(rng, 4);
        const CMatrix g = random_matrix(rng, p + q, p + q);
        const CMatrix k = (HermitianMatrix::identity(p + q).scaled(0.1) + gram(g, 1.0)).matrix();
        CMatrix a(p, p), b(p, q), c(q, p), d(q, q);
        for (std::size_t i = 0; i < p + q; ++i) {
            for (std::size_t j = 0; j < p + q; ++j) {
                if (i < p && j < p) a(i, j) = k(i, j);
                else if (i < p) b(i, j - p) = k(i, j);
                else if (j < p) c(i - p, j) = k(i, j);
                else d(i - p, j - p) = k(i, j);
            }
        }
        const auto [full, split] = block_logdet_check(a, b, c, d);
        const double rel = std::abs(full - split) / std::max(1.0, std::abs(full));
        t[kBlockLogdet].record(rel <= kBlockTol, rel,
                               trial_label(index, "block determinant identity residual"));
    }
    if (wanted(opts, kSchurMonotone)) {
        const std::size_t m = draw_count(rng, 4);
        const std::size_t n = draw_count(rng, 4);
        const HermitianMatrix k1 = gram(random_matrix(rng, m, draw_count(rng, 4)), 1.0);
        const HermitianMatrix k2 = k1 + gram(random_matrix(rng, m, draw_count(rng, 4)), 1.0);
        const CMatrix s = random_matrix(rng, m, n);
        const HermitianMatrix l1 = schur_capped(k1, s);
        const HermitianMatrix l2 = schur_capped(k2, s);
        const bool ok = psd_check(l2 - l1) && psd_check(l1, k1) && psd_check(l2, k2);
        const auto ev = eigenvalues(l2 - l1);
        t[kSchurMonotone].record(ok, std::max(0.0, -ev.front()),
                                 trial_label(index, "L(K,S) not monotone / not within [0, K]"));
    }
    if (wanted(opts, kResolvent)) {
        const std::size_t n = draw_count(rng, 4);
        const CMatrix h = random_matrix(rng, n, n);
        for (double rho : {0.0, 1.0, 1e3, 1e6, 1e9}) {
            const double r = resolvent_identity_check(h, rho);
            const double contract = 1e-9 * (1.0 + rho);
            t[kResolvent].record(r <= contract, r / contract,
                                 trial_label(index, "resolvent identity residual above contract"));
        }
    }
}

Tally check_slopes(const ValidationOptions& opts) {
    Tally tally;
    std::vector<double> snr;
    for (double e = opts.snr_decade_lo; e <= opts.snr_decade_hi + 1e-9; e += 0.5) {
        snr.push_back(std::pow(10.0, e));
    }
    for (std::size_t m : {1u, 2u}) {
        for (double alpha : {0.5, 1.0, 2.0}) {
            SlopeSweep sweep;
            sweep.m1 = sweep.n1 = sweep.m2 = sweep.n2 = m;
            sweep.alpha = alpha;
            sweep.beta = 0.0;
            sweep.seed = opts.corpus.seed;
            sweep.snr = snr;
            std::ostringstream label;
            label << "M=" << m << " alpha=" << alpha;
            try {
                for (const auto& s : empirical_slope(sweep)) {
                    tally.record(s.abs_err <= kSlopeTol, s.abs_err,
                                 label.str() + " " + s.term + " slope off by " +
                                     std::to_string(s.abs_err));
                }
            } catch (const Error& e) {
                tally.record(false, 0.0, label.str() + ": " + e.what());
            }
        }
    }
    return tally;
}

}  // namespace

ChannelInstance corpus_channel(const CorpusOptions& opts, std::uint64_t index) {
    if (opts.max_antennas == 0 || opts.log10_rho_max < opts.log10_rho_min || opts.c_max < 0.0) {
        throw InvalidSpec("corpus options out of range");
    }
    CounterRng rng(CounterRng::word(opts.seed, index));
    ChannelSeedSpec s;
    s.m1 = draw_count(rng, opts.max_antennas);
    s.n1 = draw_count(rng, opts.max_antennas);
    s.m2 = draw_count(rng, opts.max_antennas);
    s.n2 = draw_count(rng, opts.max_antennas);
    const double span = opts.log10_rho_max - opts.log10_rho_min;
    s.rho11 = std::pow(10.0, opts.log10_rho_min + span * rng.next_uniform());
    s.rho12 = std::pow(10.0, opts.log10_rho_min + span * rng.next_uniform());
    s.rho21 = std::pow(10.0, opts.log10_rho_min + span * rng.next_uniform());
    s.rho22 = std::pow(10.0, opts.log10_rho_min + span * rng.next_uniform());
    s.c12 = opts.c_max * rng.next_uniform();
    s.c21 = opts.c_max * rng.next_uniform();
    s.seed = rng.next_word();
    return generate(s);
}

bool ValidationReport::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.failed == 0; });
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "xi_bound",
        "xi_boundary",
        "split_valid",
        "block_logdet",
        "schur_capped_monotone",
        "resolvent_identity",
        "sandwich_eroded_outer_in_guaranteed",
        "sandwich_guaranteed_in_combined",
        "sandwich_combined_in_outer",
        "outer_monotone_in_backhaul",
        "slope_prelogs",
    };
    return names;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("MIMOIC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ValidationReport run_validation(const ValidationOptions& opts) {
    for (const auto& name : opts.only) {
        if (std::find(property_names().begin(), property_names().end(), name) ==
            property_names().end()) {
            throw InvalidSpec("unknown property: " + name);
        }
    }
    ValidationReport report;
    if (opts.trials == 0) {
        report.warnings.push_back("no trials requested; nothing was checked");
        return report;
    }

    std::vector<TrialTallies> per_trial(opts.trials);
    const unsigned threads =
        std::min<std::size_t>(opts.threads > 0 ? opts.threads : worker_threads(), opts.trials);
    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < opts.trials; i += threads) {
            TrialTallies& t = per_trial[i];
            try {
                check_channel_properties(opts, i, t);
                check_matrix_lemmas(opts, i, t);
            } catch (const std::exception& e) {
                // Charged to the split check: every channel property depends on it.
                t[kSplitValid].record(false, 0.0, trial_label(i, e.what()));
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) {
        pool.emplace_back(worker, w);
    }
    worker(0);
    for (auto& th : pool) {
        th.join();
    }

    std::array<Tally, kPropCount> total;
    for (const auto& t : per_trial) {
        for (std::size_t p = 0; p < kPropCount; ++p) {
            if (t[p].checked == 0) {
                continue;
            }
            if (total[p].failed == 0 && t[p].failed > 0) {
                total[p].first_failure = t[p].first_failure;
            }
            total[p].checked += t[p].checked;
            total[p].failed += t[p].failed;
            total[p].worst = std::max(total[p].worst, t[p].worst);
        }
    }
    if (wanted(opts, kSlopes)) {
        total[kSlopes] = check_slopes(opts);
    }

    for (std::size_t p = 0; p < kPropCount; ++p) {
        if (!wanted(opts, static_cast<Prop>(p))) {
            continue;
        }
        report.properties.push_back({property_names()[p], total[p].checked, total[p].failed,
                                     total[p].worst, total[p].first_failure});
    }
    return report;
}

nlohmann::json report_to_json(const ValidationReport& r) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : r.properties) {
        props.push_back({{"name", p.name},
                         {"checked", p.checked},
                         {"failed", p.failed},
                         {"worst", p.worst},
                         {"first_failure", p.first_failure}});
    }
    return {{"passed", r.passed()}, {"properties", props}, {"warnings", r.warnings}};
}

}  // namespace mimoic
