// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// JSON documents. Complex entries are [re, im]; infinite capacities and
// bounds are the string "inf". Doubles round-trip exactly.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mimoic/asymptotics.hpp"
#include "mimoic/channel.hpp"
#include "mimoic/region.hpp"

namespace mimoic {

nlohmann::json channel_to_json(const ChannelInstance& ch);
/// Throws ParseError on malformed documents; shape and sign rules are
/// enforced by validate().
ChannelInstance channel_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const RateRegion2D& r);
RateRegion2D region_from_json(const nlohmann::json& j);

nlohmann::json slopes_to_json(const std::vector<SlopeEstimate>& slopes);

/// A double, or "inf" for +inf.
nlohmann::json number_or_inf(double v);
double parse_number_or_inf(const nlohmann::json& j, const char* what);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mimoic
