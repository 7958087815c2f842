// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <limits>

#include "mimoic/channel.hpp"
#include "mimoic/errors.hpp"
#include "mimoic/io.hpp"
#include "mimoic/outer.hpp"

using namespace mimoic;
using nlohmann::json;

TEST(Io, ChannelRoundTripIsExact) {
    ChannelSeedSpec s;
    s.m1 = 2;
    s.n1 = 3;
    s.m2 = 1;
    s.n2 = 4;
    s.rho11 = 1e7;
    s.rho12 = 0.1;
    s.rho21 = 3.3;
    s.rho22 = 12;
    s.c12 = std::numeric_limits<double>::infinity();
    s.c21 = 2.5;
    s.seed = 17;
    const ChannelInstance ch = generate(s);
    const json j = channel_to_json(ch);
    EXPECT_EQ(j["c"]["12"], "inf");
    EXPECT_EQ(channel_from_json(json::parse(j.dump())), ch);
}

TEST(Io, ChannelParseErrors) {
    json j = channel_to_json(siso_weak_instance());
    json bad = j;
    bad.erase("h21");
    EXPECT_THROW(channel_from_json(bad), ParseError);
    bad = j;
    bad["h11"] = json::array({json::array({1.0})});
    EXPECT_THROW(channel_from_json(bad), ParseError);
    bad = j;
    bad["rho"]["11"] = "loud";
    EXPECT_THROW(channel_from_json(bad), ParseError);
    bad = j;
    bad["m1"] = -1;
    EXPECT_THROW(channel_from_json(bad), ParseError);
    bad = j;
    bad["c"]["21"] = "lots";
    EXPECT_THROW(channel_from_json(bad), ParseError);
    EXPECT_THROW(channel_from_json(json::array()), ParseError);
}

TEST(Io, RegionRoundTrip) {
    const RateRegion2D r = outer_region(mimo_reference_instance(15, 21));
    const json j = region_to_json(r);
    EXPECT_EQ(region_from_json(json::parse(j.dump())), r);
    EXPECT_FALSE(j["empty"].get<bool>());
}

TEST(Io, RegionRoundTripWithInfiniteBound) {
    const RateRegion2D r = region_from_constraints(
        {{1, 0, 2}, {0, 1, 3}, {1, 1, std::numeric_limits<double>::infinity()}});
    EXPECT_EQ(region_from_json(region_to_json(r)), r);
}

TEST(Io, RegionRejectsInconsistentVertices) {
    json j = region_to_json(region_from_constraints({{1, 0, 2}, {0, 1, 2}}));
    j["vertices"][2] = json::array({2.0, 2.5});
    EXPECT_THROW(region_from_json(j), ParseError);
    json k = region_to_json(region_from_constraints({{1, 0, 2}, {0, 1, 2}}));
    k["constraints"][0]["a"] = -1.0;
    EXPECT_THROW(region_from_json(k), ParseError);
    k = region_to_json(region_from_constraints({{1, 0, 2}, {0, 1, 2}}));
    k["empty"] = true;
    EXPECT_THROW(region_from_json(k), ParseError);
}

TEST(Io, SlopesJsonShape) {
    const json j = slopes_to_json({{"i4", 3.0, 2.98, 0.02}});
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["term"], "i4");
    EXPECT_EQ(j[0]["predicted"], 3.0);
    EXPECT_EQ(j[0]["abs_err"], 0.02);
}

TEST(Io, NumberOrInf) {
    EXPECT_EQ(number_or_inf(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(number_or_inf(1.5), 1.5);
    EXPECT_EQ(parse_number_or_inf(json("inf"), "x"), std::numeric_limits<double>::infinity());
    EXPECT_THROW(parse_number_or_inf(json("nope"), "x"), ParseError);
}

TEST(Io, MissingFile) {
    EXPECT_THROW(read_text_file("/nonexistent/mimoic/file.json"), ParseError);
}
