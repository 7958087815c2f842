// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mimoic/achievability.hpp"
#include "mimoic/asymptotics.hpp"
#include "mimoic/channel.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/io.hpp"
#include "mimoic/outer.hpp"
#include "mimoic/region.hpp"
#include "mimoic/validation.hpp"

namespace mimoic {

namespace {

using nlohmann::json;

constexpr double kContainTol = 1e-6;

// Bad user input that CLI11 cannot catch by itself.
struct UsageError : Error {
    using Error::Error;
};

// Collects digests for the optional run report.
class RunLog {
public:
    explicit RunLog(const std::vector<std::string>& args) : args_(args) {
        for (const auto& a : args) {
            input_ = fnv1a64(a, input_);
            input_ = fnv1a64(std::string_view("\0", 1), input_);
        }
    }

    std::string read_input(const std::string& path) {
        std::string text = read_text_file(path);
        input_ = fnv1a64(text, input_);
        return text;
    }

    void write_output(const std::string& path, const std::string& text) {
        write_text_file(path, text);
        outputs_.push_back({path, digest_hex(fnv1a64(text))});
    }

    json report(bool passed, double wall_seconds) const {
        json outs = json::array();
        for (const auto& [path, digest] : outputs_) {
            outs.push_back({{"path", path}, {"digest", digest}});
        }
        return {{"command", args_},
                {"input_digest", digest_hex(input_)},
                {"outputs", outs},
                {"passed", passed},
                {"wall_time_s", wall_seconds}};
    }

private:
    std::vector<std::string> args_;
    std::uint64_t input_ = 0xcbf29ce484222325ULL;
    std::vector<std::pair<std::string, std::string>> outputs_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ChannelInstance load_channel(RunLog& log, const std::string& path, std::ostream& err) {
    json j;
    try {
        j = json::parse(log.read_input(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    ChannelInstance ch = channel_from_json(j);
    for (const auto& w : validate(ch)) {
        err << "warning: " << w << "\n";
    }
    return ch;
}

std::pair<double, double> parse_decades(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("--snr-decades expects a:b");
    }
    try {
        std::size_t used = 0;
        const double lo = std::stod(text.substr(0, colon), &used);
        if (used != colon) throw UsageError("bad lower decade");
        const std::string rest = text.substr(colon + 1);
        const double hi = std::stod(rest, &used);
        if (used != rest.size()) throw UsageError("bad upper decade");
        if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
            throw UsageError("--snr-decades needs a < b");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--snr-decades expects numbers a:b");
    }
}

std::vector<double> decade_grid(double lo, double hi) {
    std::vector<double> snr;
    for (double e = lo; e <= hi + 1e-9; e += 0.5) {
        snr.push_back(std::pow(10.0, e));
    }
    return snr;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// ---- subcommand option bundles ---------------------------------------------

struct GenOpts {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    std::optional<double> rho11, rho12, rho21, rho22;
    std::optional<double> snr, alpha, beta;
    double c12 = 0.0, c21 = 0.0;
    std::string c12_text, c21_text;
    std::uint64_t seed = 0;
    std::string preset;
    bool unit_gains = false;
    std::string out;
};

struct RegionOpts {
    std::string channel, which = "all", out, svg;
};

struct GapOpts {
    std::string channel, out;
};

struct DofOpts {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    double beta12 = 0.0, beta21 = 0.0;
    std::string out, svg;
};

struct GdofOpts {
    std::size_t m = 1;
    double alpha = 1.0, beta = 0.0;
    std::string out;
};

struct CurveOpts {
    std::size_t m = 1;
    double beta = 0.0, alpha_min = 0.0, alpha_max = 3.0, step = 0.01;
    std::string out;
};

struct ValidateOpts {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t max_antennas = 4;
    std::string decades = "6:12";
    std::vector<std::string> properties;
    bool inject_fault = false;
    std::string out;
};

struct SlopeOpts {
    std::size_t m1 = 1, n1 = 1, m2 = 1, n2 = 1;
    double alpha = 1.0, beta = 0.0;
    std::uint64_t seed = 0;
    std::string decades = "6:12";
    std::string out;
};

// ---- subcommands ------------------------------------------------------------

double backhaul_flag(const std::string& text, double fallback) {
    if (text.empty()) return fallback;
    if (text == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw UsageError("bad backhaul value: " + text);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("bad backhaul value: " + text);
    }
}

int cmd_gen_channel(const GenOpts& o, RunLog& log, std::ostream& out, std::ostream& err) {
    const double c12 = backhaul_flag(o.c12_text, 0.0);
    const double c21 = backhaul_flag(o.c21_text, 0.0);
    const bool any_rho = o.rho11 || o.rho12 || o.rho21 || o.rho22;
    const bool any_exp = o.snr || o.alpha || o.beta;
    if (any_rho && any_exp) {
        throw UsageError("use either --rho11..--rho22 or --snr/--alpha/--beta");
    }
    ChannelInstance ch;
    if (!o.preset.empty()) {
        if (any_rho || any_exp || o.unit_gains) {
            throw UsageError("--preset cannot be combined with gain flags");
        }
        if (o.preset == "weak") ch = siso_weak_instance();
        else if (o.preset == "strong") ch = siso_strong_instance();
        else if (o.preset == "mixed") ch = siso_mixed_instance();
        else ch = mimo_reference_instance(c12, c21);
        if (o.preset != "mimo-ref" && (!o.c12_text.empty() || !o.c21_text.empty())) {
            ch = with_backhaul(ch, c12, c21);
        }
    } else if (o.unit_gains) {
        if (o.m1 != 1 || o.n1 != 1 || o.m2 != 1 || o.n2 != 1 || any_exp) {
            throw UsageError("--unit-gains needs a 1x1 channel and explicit --rho flags");
        }
        ch = siso_from_scalars(o.rho11.value_or(1.0), o.rho22.value_or(1.0),
                               o.rho21.value_or(1.0), o.rho12.value_or(1.0), c12, c21);
    } else if (any_exp) {
        if (!o.snr) throw UsageError("--alpha/--beta require --snr");
        ChannelSeedSpec s = ChannelSeedSpec::from_exponents(
            o.m1, o.n1, o.m2, o.n2, *o.snr, o.alpha.value_or(1.0), o.beta.value_or(0.0), o.seed);
        if (!o.c12_text.empty()) s.c12 = c12;
        if (!o.c21_text.empty()) s.c21 = c21;
        ch = generate(s);
    } else {
        ChannelSeedSpec s;
        s.m1 = o.m1;
        s.n1 = o.n1;
        s.m2 = o.m2;
        s.n2 = o.n2;
        s.rho11 = o.rho11.value_or(1.0);
        s.rho12 = o.rho12.value_or(1.0);
        s.rho21 = o.rho21.value_or(1.0);
        s.rho22 = o.rho22.value_or(1.0);
        s.c12 = c12;
        s.c21 = c21;
        s.seed = o.seed;
        ch = generate(s);
    }
    for (const auto& w : validate(ch)) {
        err << "warning: " << w << "\n";
    }
    log.write_output(o.out, dump(channel_to_json(ch)));
    out << "wrote " << ch.m1 << "x" << ch.n1 << " / " << ch.m2 << "x" << ch.n2 << " channel to "
        << o.out << "\n";
    return kExitOk;
}

int cmd_region(const RegionOpts& o, RunLog& log, std::ostream& out, std::ostream& err) {
    const ChannelInstance ch = load_channel(log, o.channel, err);
    std::vector<std::pair<std::string, RateRegion2D>> regions;
    const OuterTerms terms = outer_terms(ch);
    if (o.which == "outer" || o.which == "all") {
        regions.emplace_back("outer", outer_region_from_terms(terms));
    }
    if (o.which == "inner-guaranteed" || o.which == "all") {
        regions.emplace_back("inner_guaranteed", guaranteed_inner_from_terms(terms, ch.n1, ch.n2));
    }
    if (o.which == "achievable" || o.which == "all") {
        regions.emplace_back("achievable", combined_achievable(ch));
    }
    json doc;
    json tj = json::object();
    for (std::size_t k = 1; k <= 10; ++k) {
        tj[OuterTerms::name(k)] = number_or_inf(terms[k]);
    }
    doc["outer_terms"] = tj;
    json rj = json::object();
    for (const auto& [name, r] : regions) {
        rj[name] = region_to_json(r);
        out << name << ": " << r.vertices().size() << " vertices" << (r.empty() ? " (empty)" : "")
            << "\n";
    }
    doc["regions"] = rj;
    log.write_output(o.out, dump(doc));
    if (!o.svg.empty()) {
        log.write_output(o.svg, regions_svg(regions));
    }
    return kExitOk;
}

int cmd_gap(const GapOpts& o, RunLog& log, std::ostream& out, std::ostream& err, bool& passed) {
    const ChannelInstance ch = load_channel(log, o.channel, err);
    const OuterTerms terms = outer_terms(ch);
    const RateRegion2D outer = outer_region_from_terms(terms);
    const RateRegion2D inner = guaranteed_inner_from_terms(terms, ch.n1, ch.n2);
    const RateRegion2D ach = combined_achievable(ch);
    const double bound = static_cast<double>(ch.n1 + ch.n2);
    const double gap_ach = max_gap(outer, ach);
    const double gap_inner = max_gap(outer, inner);
    const bool eroded_ok = is_subset(erode_by_box(outer, bound, bound), inner, kContainTol);
    const bool inner_ok = is_subset(inner, ach, kContainTol);
    const bool outer_ok = is_subset(ach, outer, kContainTol);
    const bool gap_ok = gap_ach <= bound + kContainTol;
    passed = eroded_ok && inner_ok && outer_ok && gap_ok;
    json doc = {{"gap_outer_achievable", gap_ach},
                {"gap_outer_inner_guaranteed", number_or_inf(gap_inner)},
                {"bound", bound},
                {"checks",
                 {{"eroded_outer_in_inner_guaranteed", eroded_ok},
                  {"inner_guaranteed_in_achievable", inner_ok},
                  {"achievable_in_outer", outer_ok},
                  {"gap_within_bound", gap_ok}}},
                {"passed", passed}};
    if (!o.out.empty()) {
        log.write_output(o.out, dump(doc));
    }
    out << "gap(outer, achievable) = " << fmt(gap_ach) << " bits, bound " << fmt(bound) << ": "
        << (passed ? "pass" : "FAIL") << "\n";
    return passed ? kExitOk : kExitFailure;
}

void check_rate_exponent(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw UsageError(std::string(name) + " must be finite and nonnegative");
    }
}

int cmd_dof(const DofOpts& o, RunLog& log, std::ostream& out) {
    check_rate_exponent(o.beta12, "--beta12");
    check_rate_exponent(o.beta21, "--beta21");
    const DofSpec s{o.m1, o.n1, o.m2, o.n2, o.beta12, o.beta21};
    const auto bounds = dof_bounds(s);
    const DofRegion r = dof_region(s);
    json b = json::object();
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        b[OuterTerms::name(k + 1)] = number_or_inf(bounds[k]);
    }
    const json doc = {{"bounds", b}, {"region", region_to_json(r)}};
    if (!o.out.empty()) log.write_output(o.out, dump(doc));
    if (!o.svg.empty()) log.write_output(o.svg, regions_svg({{"dof", r}}));
    out << "vertices:";
    for (const auto& p : r.vertices()) out << " (" << fmt(p.r1) << "," << fmt(p.r2) << ")";
    out << "\n";
    return kExitOk;
}

int cmd_gdof(const GdofOpts& o, RunLog& log, std::ostream& out) {
    check_rate_exponent(o.alpha, "--alpha");
    check_rate_exponent(o.beta, "--beta");
    const GdofSpec s{o.m, o.alpha, o.beta};
    const double v = gdof_value(s);
    const json doc = {{"m", o.m}, {"alpha", o.alpha}, {"beta", o.beta}, {"gdof", v},
                      {"region", region_to_json(gdof_region(s))}};
    if (!o.out.empty()) log.write_output(o.out, dump(doc));
    out << fmt(v) << "\n";
    return kExitOk;
}

int cmd_gdof_curve(const CurveOpts& o, RunLog& log, std::ostream& out) {
    check_rate_exponent(o.alpha_min, "--alpha-min");
    check_rate_exponent(o.beta, "--beta");
    if (!(o.alpha_max >= o.alpha_min) || !std::isfinite(o.alpha_max)) {
        throw UsageError("--alpha-max must be >= --alpha-min");
    }
    if (!(o.step > 0.0) || !std::isfinite(o.step)) {
        throw UsageError("--step must be positive");
    }
    const auto curve = gdof_curve(o.m, o.beta, alpha_grid(o.alpha_min, o.alpha_max, o.step));
    log.write_output(o.out, curve_csv(curve));
    out << "wrote " << curve.size() << " points to " << o.out << "\n";
    return kExitOk;
}

int cmd_validate(const ValidateOpts& o, RunLog& log, std::ostream& out, std::ostream& err,
                 bool& passed) {
    ValidationOptions v;
    v.trials = o.trials;
    v.corpus.seed = o.seed;
    if (o.max_antennas == 0) throw UsageError("--max-antennas must be positive");
    v.corpus.max_antennas = o.max_antennas;
    std::tie(v.snr_decade_lo, v.snr_decade_hi) = parse_decades(o.decades);
    if (v.snr_decade_hi - v.snr_decade_lo < 4.0) {
        throw UsageError("--snr-decades must span at least four decades");
    }
    v.only = o.properties;
    for (const auto& name : v.only) {
        if (std::find(property_names().begin(), property_names().end(), name) ==
            property_names().end()) {
            throw UsageError("unknown property: " + name);
        }
    }
    v.inject_fault = o.inject_fault;
    const ValidationReport r = run_validation(v);
    passed = r.passed();
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    for (const auto& p : r.properties) {
        out << (p.failed == 0 ? "PASS " : "FAIL ") << p.name << " " << (p.checked - p.failed) << "/"
            << p.checked;
        if (p.failed > 0) out << " (" << p.first_failure << ")";
        out << "\n";
    }
    if (!o.out.empty()) log.write_output(o.out, dump(report_to_json(r)));
    return passed ? kExitOk : kExitFailure;
}

int cmd_slope(const SlopeOpts& o, RunLog& log, std::ostream& out, bool& passed) {
    check_rate_exponent(o.alpha, "--alpha");
    check_rate_exponent(o.beta, "--beta");
    const auto [lo, hi] = parse_decades(o.decades);
    SlopeSweep s;
    s.m1 = o.m1;
    s.n1 = o.n1;
    s.m2 = o.m2;
    s.n2 = o.n2;
    s.seed = o.seed;
    s.alpha = o.alpha;
    s.beta = o.beta;
    s.snr = decade_grid(lo, hi);
    const auto est = empirical_slope(s);
    passed = std::all_of(est.begin(), est.end(),
                         [](const SlopeEstimate& e) { return e.abs_err <= 0.05; });
    for (const auto& e : est) {
        out << e.term << " predicted " << fmt(e.predicted) << " estimated " << fmt(e.estimated)
            << "\n";
    }
    if (!o.out.empty()) {
        log.write_output(o.out, dump({{"slopes", slopes_to_json(est)}, {"passed", passed}}));
    }
    return passed ? kExitOk : kExitFailure;
}

void add_counts(CLI::App* sub, std::size_t& m1, std::size_t& n1, std::size_t& m2,
                std::size_t& n2) {
    sub->add_option("--m1", m1, "transmit antennas, user 1")->check(CLI::PositiveNumber);
    sub->add_option("--n1", n1, "receive antennas, user 1")->check(CLI::PositiveNumber);
    sub->add_option("--m2", m2, "transmit antennas, user 2")->check(CLI::PositiveNumber);
    sub->add_option("--n2", n2, "receive antennas, user 2")->check(CLI::PositiveNumber);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
    for (unsigned char c : bytes) {
        state ^= c;
        state *= 0x100000001b3ULL;
    }
    return state;
}

std::string digest_hex(std::uint64_t d) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds for the two-user MIMO interference channel with receiver cooperation",
                 "mimoic"};
    app.require_subcommand(1);
    std::string report_path;
    app.add_option("--report", report_path, "write a run report JSON here");

    GenOpts gen;
    auto* g = app.add_subcommand("gen-channel", "generate a channel instance");
    add_counts(g, gen.m1, gen.n1, gen.m2, gen.n2);
    g->add_option("--rho11", gen.rho11, "direct gain, user 1")->check(CLI::NonNegativeNumber);
    g->add_option("--rho12", gen.rho12, "cross gain, tx 1 to rx 2")->check(CLI::NonNegativeNumber);
    g->add_option("--rho21", gen.rho21, "cross gain, tx 2 to rx 1")->check(CLI::NonNegativeNumber);
    g->add_option("--rho22", gen.rho22, "direct gain, user 2")->check(CLI::NonNegativeNumber);
    g->add_option("--snr", gen.snr, "direct gain for both users")->check(CLI::PositiveNumber);
    g->add_option("--alpha", gen.alpha, "cross gain exponent")->check(CLI::NonNegativeNumber);
    g->add_option("--beta", gen.beta, "backhaul exponent")->check(CLI::NonNegativeNumber);
    g->add_option("--c12", gen.c12_text, "backhaul rx1 to rx2 in bits, or inf");
    g->add_option("--c21", gen.c21_text, "backhaul rx2 to rx1 in bits, or inf");
    g->add_option("--seed", gen.seed, "fading seed");
    g->add_option("--preset", gen.preset, "reference instance")
        ->check(CLI::IsMember({"weak", "strong", "mixed", "mimo-ref"}));
    g->add_flag("--unit-gains", gen.unit_gains, "1x1 channel with unit fading");
    g->add_option("--out", gen.out, "channel JSON path")->required();

    RegionOpts reg;
    auto* r = app.add_subcommand("region", "compute rate regions");
    r->add_option("--channel", reg.channel, "channel JSON")->required();
    r->add_option("--which", reg.which, "which region")
        ->check(CLI::IsMember({"outer", "inner-guaranteed", "achievable", "all"}));
    r->add_option("--out", reg.out, "region JSON path")->required();
    r->add_option("--svg", reg.svg, "optional SVG plot path");

    GapOpts gap;
    auto* gp = app.add_subcommand("gap", "check the constant-gap sandwich");
    gp->add_option("--channel", gap.channel, "channel JSON")->required();
    gp->add_option("--out", gap.out, "gap report JSON path");

    DofOpts dof;
    auto* d = app.add_subcommand("dof", "degrees-of-freedom region");
    add_counts(d, dof.m1, dof.n1, dof.m2, dof.n2);
    d->add_option("--beta12", dof.beta12, "backhaul exponent rx1 to rx2");
    d->add_option("--beta21", dof.beta21, "backhaul exponent rx2 to rx1");
    d->add_option("--out", dof.out, "JSON path");
    d->add_option("--svg", dof.svg, "optional SVG plot path");

    GdofOpts gd;
    auto* gs = app.add_subcommand("gdof", "symmetric generalized degrees of freedom");
    gs->add_option("--m", gd.m, "antennas per node")->check(CLI::PositiveNumber);
    gs->add_option("--alpha", gd.alpha, "cross gain exponent");
    gs->add_option("--beta", gd.beta, "backhaul exponent");
    gs->add_option("--out", gd.out, "JSON path");

    CurveOpts cv;
    auto* c = app.add_subcommand("gdof-curve", "symmetric GDoF versus alpha as CSV");
    c->add_option("--m", cv.m, "antennas per node")->check(CLI::PositiveNumber);
    c->add_option("--beta", cv.beta, "backhaul exponent");
    c->add_option("--alpha-min", cv.alpha_min, "first alpha");
    c->add_option("--alpha-max", cv.alpha_max, "last alpha");
    c->add_option("--step", cv.step, "alpha step");
    c->add_option("--out", cv.out, "CSV path")->required();

    ValidateOpts va;
    auto* v = app.add_subcommand("validate", "run the property suite");
    v->add_option("--trials", va.trials, "random channels");
    v->add_option("--seed", va.seed, "corpus seed");
    v->add_option("--max-antennas", va.max_antennas, "largest antenna count");
    v->add_option("--snr-decades", va.decades, "slope sweep range a:b in log10 SNR");
    v->add_option("--property", va.properties, "restrict to named properties (repeatable)");
    v->add_flag("--inject-fault", va.inject_fault)->group("");
    v->add_option("--out", va.out, "report JSON path");

    SlopeOpts sl;
    auto* s = app.add_subcommand("slope", "empirical prelog slopes of the outer terms");
    add_counts(s, sl.m1, sl.n1, sl.m2, sl.n2);
    s->add_option("--alpha", sl.alpha, "cross gain exponent");
    s->add_option("--beta", sl.beta, "backhaul exponent");
    s->add_option("--seed", sl.seed, "fading seed");
    s->add_option("--snr-decades", sl.decades, "range a:b in log10 SNR");
    s->add_option("--out", sl.out, "JSON path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    RunLog log(args);
    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    bool passed = true;
    try {
        if (g->parsed()) code = cmd_gen_channel(gen, log, out, err);
        else if (r->parsed()) code = cmd_region(reg, log, out, err);
        else if (gp->parsed()) code = cmd_gap(gap, log, out, err, passed);
        else if (d->parsed()) code = cmd_dof(dof, log, out);
        else if (gs->parsed()) code = cmd_gdof(gd, log, out);
        else if (c->parsed()) code = cmd_gdof_curve(cv, log, out);
        else if (v->parsed()) code = cmd_validate(va, log, out, err, passed);
        else if (s->parsed()) code = cmd_slope(sl, log, out, passed);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NegativeParameter& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSpec& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    if (!report_path.empty()) {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        try {
            write_text_file(report_path, dump(log.report(passed && code == kExitOk, wall)));
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitFailure;
        }
    }
    return code;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace mimoic
