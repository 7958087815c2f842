// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "mimoic/errors.hpp"
#include "mimoic/validation.hpp"

using namespace mimoic;

namespace {

const PropertyResult& find(const ValidationReport& r, const std::string& name) {
    const auto it = std::find_if(r.properties.begin(), r.properties.end(),
                                 [&](const PropertyResult& p) { return p.name == name; });
    if (it == r.properties.end()) throw std::runtime_error("missing property " + name);
    return *it;
}

}  // namespace

TEST(Validation, CorpusIsDeterministicAndInRange) {
    CorpusOptions o;
    o.seed = 5;
    o.max_antennas = 3;
    o.log10_rho_max = 4;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const ChannelInstance a = corpus_channel(o, i);
        EXPECT_EQ(a, corpus_channel(o, i));
        EXPECT_LE(a.m1, 3u);
        EXPECT_LE(a.n2, 3u);
        EXPECT_GE(a.rho11, 1.0);
        EXPECT_LE(a.rho11, 1e4);
        EXPECT_LE(a.c12, 30.0);
    }
    EXPECT_NE(corpus_channel(o, 0), corpus_channel(o, 1));
    o.max_antennas = 0;
    EXPECT_THROW(corpus_channel(o, 0), InvalidSpec);
}

TEST(Validation, ZeroTrialsPassesWithWarning) {
    ValidationOptions o;
    o.trials = 0;
    const ValidationReport r = run_validation(o);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Validation, LemmaAndSplitPropertiesPass) {
    ValidationOptions o;
    o.trials = 40;
    o.only = {"xi_bound", "xi_boundary", "split_valid", "block_logdet", "schur_capped_monotone",
              "resolvent_identity", "sandwich_eroded_outer_in_guaranteed",
              "sandwich_combined_in_outer", "outer_monotone_in_backhaul"};
    const ValidationReport r = run_validation(o);
    ASSERT_EQ(r.properties.size(), o.only.size());
    for (const auto& p : r.properties) {
        EXPECT_EQ(p.failed, 0u) << p.name << ": " << p.first_failure;
        EXPECT_GT(p.checked, 0u) << p.name;
    }
    EXPECT_EQ(find(r, "xi_bound").checked, 80u);
    EXPECT_EQ(find(r, "resolvent_identity").checked, 200u);
}

TEST(Validation, ThreadCountDoesNotChangeReport) {
    ValidationOptions o;
    o.trials = 24;
    o.only = {"xi_bound", "sandwich_guaranteed_in_combined", "block_logdet"};
    o.threads = 1;
    const auto one = report_to_json(run_validation(o));
    o.threads = 5;
    const auto five = report_to_json(run_validation(o));
    EXPECT_EQ(one.dump(), five.dump());
}

TEST(Validation, InjectedFaultIsCaught) {
    ValidationOptions o;
    o.trials = 5;
    o.only = {"xi_boundary"};
    o.inject_fault = true;
    const ValidationReport r = run_validation(o);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(find(r, "xi_boundary").failed, 5u);
}

TEST(Validation, UnknownPropertyRejected) {
    ValidationOptions o;
    o.only = {"no_such_property"};
    EXPECT_THROW(run_validation(o), InvalidSpec);
}

TEST(Validation, SlopeProperty) {
    ValidationOptions o;
    o.trials = 1;
    o.only = {"slope_prelogs"};
    const ValidationReport r = run_validation(o);
    EXPECT_TRUE(r.passed()) << find(r, "slope_prelogs").first_failure;
    EXPECT_EQ(find(r, "slope_prelogs").checked, 60u);
}

TEST(Validation, WorkerThreadsFromEnvironment) {
    setenv("MIMOIC_THREADS", "3", 1);
    EXPECT_EQ(worker_threads(), 3u);
    setenv("MIMOIC_THREADS", "zero", 1);
    EXPECT_GE(worker_threads(), 1u);
    unsetenv("MIMOIC_THREADS");
}

TEST(Validation, ReportJsonShape) {
    ValidationOptions o;
    o.trials = 2;
    o.only = {"split_valid"};
    const auto j = report_to_json(run_validation(o));
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["properties"][0]["name"], "split_valid");
    EXPECT_EQ(j["properties"][0]["checked"], 2);
}
