// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------
//
// Property suite behind `mimoic validate`: seeded random corpora checked
// against the invariants of every module.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mimoic/channel.hpp"

namespace mimoic {

struct CorpusOptions {
    std::uint64_t seed = 1;
    std::size_t max_antennas = 4;
    double log10_rho_min = 0.0;
    double log10_rho_max = 9.0;
    double c_max = 30.0;
};

/// Trial `index` of the corpus: antennas uniform in 1..max_antennas, each
/// rho log-uniform on [10^min, 10^max], each C uniform on [0, c_max].
/// Depends only on (options, index).
ChannelInstance corpus_channel(const CorpusOptions& opts, std::uint64_t index);

struct ValidationOptions {
    std::size_t trials = 100;
    CorpusOptions corpus;
    double snr_decade_lo = 6.0;  // slope sweeps over 10^lo .. 10^hi
    double snr_decade_hi = 12.0;
    unsigned threads = 0;        // 0: MIMOIC_THREADS or hardware concurrency
    std::vector<std::string> only;  // property names to run; empty = all
    bool inject_fault = false;   // harness self-test: perturbs the quantization loss
};

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    double worst = 0.0;  // largest violation seen (property-specific units)
    std::string first_failure;
};

struct ValidationReport {
    std::vector<PropertyResult> properties;
    std::vector<std::string> warnings;

    bool passed() const;
};

/// Names of every property, in report order.
const std::vector<std::string>& property_names();

ValidationReport run_validation(const ValidationOptions& opts);

nlohmann::json report_to_json(const ValidationReport& r);

/// Worker count: MIMOIC_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_threads();

}  // namespace mimoic
