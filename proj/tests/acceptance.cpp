// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mimoic/achievability.hpp"
#include "mimoic/asymptotics.hpp"
#include "mimoic/channel.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/hermitian.hpp"
#include "mimoic/io.hpp"
#include "mimoic/outer.hpp"
#include "mimoic/region.hpp"
#include "mimoic/validation.hpp"

using namespace mimoic;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Constant-gap sandwich on 200 random channels.
Outcome sandwich() {
    const auto start = std::chrono::steady_clock::now();
    CorpusOptions corpus;
    corpus.seed = 2024;
    corpus.max_antennas = 4;
    corpus.log10_rho_min = 0.0;
    corpus.log10_rho_max = 8.0;
    corpus.c_max = 30.0;
    constexpr double kTol = 1e-6;
    constexpr std::size_t kTrials = 200;
    std::size_t bad_eroded = 0, bad_inner = 0, bad_outer = 0;
    double worst_inner = 0.0;
    for (std::size_t i = 0; i < kTrials; ++i) {
        const ChannelInstance ch = corpus_channel(corpus, i);
        const OuterTerms t = outer_terms(ch);
        const RateRegion2D outer = outer_region_from_terms(t);
        const RateRegion2D inner = guaranteed_inner_from_terms(t, ch.n1, ch.n2);
        const RateRegion2D ach = combined_achievable(ch);
        const double g = static_cast<double>(ch.n1 + ch.n2);
        bad_eroded += is_subset(erode_by_box(outer, g, g), inner, kTol) ? 0 : 1;
        if (!is_subset(inner, ach, kTol)) {
            ++bad_inner;
            worst_inner = std::max(worst_inner, max_gap(inner, ach));
        }
        bad_outer += is_subset(ach, outer, kTol) ? 0 : 1;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome o;
    o.pass = bad_eroded == 0 && bad_inner == 0 && bad_outer == 0 && secs < 60.0;
    o.detail = "eroded-outer not in guaranteed: " + std::to_string(bad_eroded) + "/200, " +
               "guaranteed not in achievable: " + std::to_string(bad_inner) + "/200 (worst " +
               num(worst_inner) + " bits), achievable not in outer: " +
               std::to_string(bad_outer) + "/200, " + num(secs) + " s";
    return o;
}

CorpusOptions xi_corpus() {
    CorpusOptions c;
    c.seed = 77;
    c.max_antennas = 4;
    c.log10_rho_max = 9.0;
    return c;
}

Outcome quantization_bound() {
    const CorpusOptions corpus = xi_corpus();
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_boundary = 0.0;
    std::size_t fails = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        ChannelInstance ch = corpus_channel(corpus, i);
        const double xi =
            quantization_plan(ch, covariance_split(ch), StrategyOrder::two_one_two).xi;
        const double excess = xi - static_cast<double>(ch.n2);
        worst_excess = std::max(worst_excess, excess);
        fails += excess <= 1e-9 ? 0 : 1;
        ch.rho21 = 0.0;
        const double xi0 =
            quantization_plan(ch, covariance_split(ch), StrategyOrder::two_one_two).xi;
        const double err = std::abs(xi0 - static_cast<double>(ch.n2));
        worst_boundary = std::max(worst_boundary, err);
        fails += err <= 1e-9 ? 0 : 1;
    }
    return {fails == 0, "max(xi - N2) = " + num(worst_excess) + ", boundary error " +
                            num(worst_boundary) + ", failures " + std::to_string(fails)};
}

Outcome split_validity() {
    const CorpusOptions corpus = xi_corpus();
    std::size_t fails = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < 500; ++i) {
        const ChannelInstance ch = corpus_channel(corpus, i);
        const SplitCheck c = check_split(ch, covariance_split(ch));
        worst = std::max(worst, c.max_interference_eigenvalue);
        fails += c.ok() ? 0 : 1;
    }
    return {fails == 0, "failures " + std::to_string(fails) + "/500, max interference eigenvalue " +
                            num(worst)};
}

Outcome matrix_lemmas() {
    ValidationOptions o;
    o.trials = 200;
    o.corpus.seed = 99;
    o.only = {"block_logdet", "schur_capped_monotone", "resolvent_identity"};
    const ValidationReport r = run_validation(o);
    std::string detail;
    for (const auto& p : r.properties) {
        detail += p.name + " " + std::to_string(p.checked - p.failed) + "/" +
                  std::to_string(p.checked) + "; ";
    }
    return {r.passed(), detail};
}

Outcome siso_figures() {
    bool ok = true;
    std::string detail;
    const std::pair<const char*, ChannelInstance> cases[] = {
        {"weak", siso_weak_instance()},
        {"strong", siso_strong_instance()},
        {"mixed", siso_mixed_instance()}};
    for (const auto& [name, ch] : cases) {
        const RateRegion2D outer = outer_region(ch);
        const RateRegion2D ach = combined_achievable(ch);
        const double gap = max_gap(outer, ach);
        const bool inside = is_subset(ach, outer, 1e-6);
        ok = ok && inside && gap <= 2.0;
        detail += std::string(name) + " gap " + num(gap) + (inside ? "" : " (escapes outer)") + "; ";
    }
    const double i1 = outer_terms(siso_weak_instance())[1];
    ok = ok && std::abs(i1 - 3.0) <= 1e-10;
    detail += "weak i1 = " + num(i1);
    return {ok, detail};
}

Outcome cooperation_nesting() {
    const double inf = std::numeric_limits<double>::infinity();
    const RateRegion2D none = outer_region(mimo_reference_instance(0, 0));
    const RateRegion2D some = outer_region(mimo_reference_instance(15, 21));
    const RateRegion2D full = outer_region(mimo_reference_instance(inf, inf));
    const bool a = is_subset(none, some, 1e-9);
    const bool b = is_subset(some, full, 1e-9);
    return {a && b, std::string("C=0 in C=(15,21): ") + (a ? "yes" : "no") +
                        ", C=(15,21) in C=inf: " + (b ? "yes" : "no")};
}

bool same_vertices(const RateRegion2D& r, const std::vector<Point>& v) {
    if (r.vertices().size() != v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(r.vertices()[i].r1 - v[i].r1) > 1e-12 ||
            std::abs(r.vertices()[i].r2 - v[i].r2) > 1e-12)
            return false;
    }
    return true;
}

Outcome dof_forms() {
    const bool siso = same_vertices(dof_region({1, 1, 1, 1, 0, 0}), {{0, 0}, {1, 0}, {0, 1}});
    const bool pent =
        same_vertices(dof_region({2, 2, 2, 2, 1, 1}), {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}});
    const bool wide = same_vertices(dof_region({4, 2, 4, 2, 5, 5}), {{0, 0}, {4, 0}, {0, 4}});
    std::size_t sat_fail = 0;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 4; ++n) {
            const double b = coop_saturation_beta(m, n);
            if (dof_region({m, n, m, n, b, b}).vertices() !=
                dof_region({m, n, m, n, b + 1, b + 1}).vertices())
                ++sat_fail;
        }
    return {siso && pent && wide && sat_fail == 0,
            std::string("fixtures ") + (siso && pent && wide ? "match" : "differ") +
                ", saturation mismatches " + std::to_string(sat_fail) + "/16"};
}

Outcome gdof_equivalence() {
    double worst_pw = 0.0, worst_nrc = 0.0, worst_full = 0.0;
    for (std::size_t m = 1; m <= 3; ++m) {
        const double md = static_cast<double>(m);
        for (double alpha : alpha_grid(0.0, 3.0, 0.01)) {
            for (double beta : {0.0, md / 4, md / 2, 3 * md / 4, md, 2 * md}) {
                worst_pw = std::max(worst_pw, std::abs(gdof_value({m, alpha, beta}) -
                                                       gdof_piecewise({m, alpha, beta})));
            }
            worst_nrc = std::max(worst_nrc, std::abs(gdof_value({m, alpha, 0}) - gdof_nrc(m, alpha)));
            worst_full = std::max(worst_full, std::abs(gdof_value({m, alpha, md * alpha}) -
                                                       md * std::max(1.0, alpha)));
        }
    }
    const bool ok = worst_pw <= 1e-12 && worst_nrc <= 1e-12 && worst_full <= 1e-12;
    return {ok, "max |six-term - piecewise| " + num(worst_pw) + ", vs W-curve " + num(worst_nrc) +
                    ", vs full cooperation " + num(worst_full)};
}

Outcome prelog_slopes() {
    std::vector<double> snr;
    for (double e = 6; e <= 12 + 1e-9; e += 0.5) snr.push_back(std::pow(10.0, e));
    double worst = 0.0;
    std::string where;
    for (std::size_t m : {1u, 2u})
        for (double alpha : {0.5, 1.0, 2.0}) {
            const SlopeSweep s{m, m, m, m, 1, alpha, 0.0, snr};
            for (const auto& e : empirical_slope(s)) {
                if (e.abs_err > worst) {
                    worst = e.abs_err;
                    where = "M=" + std::to_string(m) + " alpha=" + num(alpha) + " " + e.term;
                }
            }
        }
    return {worst <= 0.05, "max slope error " + num(worst) + " (" + where + ")"};
}

int run_cli_process(const std::string& args) {
    const std::string cmd = std::string(MIMOIC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / "mimoic_acceptance_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto p = [&](const std::string& n) { return (dir / n).string(); };
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"gen-channel --m1 3 --n1 2 --m2 2 --n2 4 --seed 11 --rho11 1e4 --rho12 30 --rho21 7 "
         "--rho22 1e3 --c12 4 --c21 inf --out " + p("ch.json"),
         {"ch.json"}},
        {"region --channel " + p("ch.json") + " --which all --out " + p("reg.json") + " --svg " +
             p("reg.svg"),
         {"reg.json", "reg.svg"}},
        {"gap --channel " + p("ch.json") + " --out " + p("gap.json"), {"gap.json"}},
        {"dof --m1 3 --n1 2 --m2 3 --n2 2 --beta12 0.5 --beta21 1 --out " + p("dof.json"),
         {"dof.json"}},
        {"gdof --m 2 --alpha 0.7 --beta 0.5 --out " + p("gdof.json"), {"gdof.json"}},
        {"gdof-curve --m 2 --beta 0.5 --out " + p("curve.csv"), {"curve.csv"}},
        {"validate --trials 12 --seed 3 --property xi_bound --property block_logdet --out " +
             p("val.json"),
         {"val.json"}},
        {"slope --m1 1 --n1 1 --m2 1 --n2 1 --alpha 0.5 --seed 4 --out " + p("slope.json"),
         {"slope.json"}},
    };
    std::size_t compared = 0, differing = 0;
    std::string detail;
    for (const auto& [args, files] : commands) {
        std::vector<std::string> first;
        std::string report_first;
        for (int round = 0; round < 2; ++round) {
            run_cli_process("--report " + p("report.json") + " " + args);
            for (std::size_t k = 0; k < files.size(); ++k) {
                std::string text;
                try {
                    text = read_text_file(p(files[k]));
                } catch (const Error&) {
                    text = "<missing>";
                }
                if (round == 0) {
                    first.push_back(text);
                } else {
                    ++compared;
                    if (text != first[k] || text == "<missing>") {
                        ++differing;
                        detail += files[k] + " differs; ";
                    }
                }
            }
            nlohmann::json rep;
            try {
                rep = nlohmann::json::parse(read_text_file(p("report.json")));
                rep.erase("wall_time_s");
            } catch (const std::exception&) {
                rep = "<missing>";
            }
            if (round == 0) {
                report_first = rep.dump();
            } else {
                ++compared;
                if (rep.dump() != report_first || rep.is_string()) {
                    ++differing;
                    detail += "run report differs; ";
                }
            }
        }
    }
    fs::remove_all(dir);
    return {differing == 0, std::to_string(compared - differing) + "/" + std::to_string(compared) +
                                " artifacts byte-identical" + (detail.empty() ? "" : ": " + detail)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"constant-gap sandwich", sandwich},
        {"quantization loss bound", quantization_bound},
        {"covariance split validity", split_validity},
        {"matrix identity suite", matrix_lemmas},
        {"SISO reference regimes", siso_figures},
        {"cooperation nesting", cooperation_nesting},
        {"DoF closed forms", dof_forms},
        {"GDoF equivalence", gdof_equivalence},
        {"prelog slopes", prelog_slopes},
        {"CLI determinism", cli_determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail
                  << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
