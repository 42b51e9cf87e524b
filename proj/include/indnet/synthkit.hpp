#pragma once

// Synthetic output-table series with controllable block structure and an
// injected structural break, used as ground truth in tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indnet/ingest.hpp"

namespace indnet {

struct IndustryGroup {
    std::vector<int> members;  // industry indices
    double p_intra = 0.6;      // shared-product probability inside the group
};

struct SynthParams {
    int n_industries = 36;
    int n_products = 36;
    std::vector<IndustryGroup> groups; // empty -> 4 equal groups, p_intra 0.6
    double p_inter = 0.15;             // shared-product probability across groups
    double diversification = 10.0;     // target mean products per industry
    double value_mu = 13.8;            // lognormal log-mean of industry totals (table units)
    double value_sigma = 1.0;
    std::uint64_t seed = 1;
    std::optional<int> break_year;     // 1-based index into the series
    double shock = 0.0;                // per-relation probability of a new relation at the break
    double noise_sigma = 0.01;         // per-year multiplicative value noise in a series
    int start_year = 2000;             // label of year index 1
};

void validate(const SynthParams& p);

SynthParams synth_params_from_json(const std::string& text);
std::string synth_params_to_json(const SynthParams& p);

// One year's table, deterministic in (seed, year index). Each industry
// gets a dominant self-coded product plus sampled shared products; the
// post-break pattern applies from break_year on when shock > 0. No
// year-to-year noise at this level.
OutputTable generate_table(const SynthParams& p, int year_index);

// Series of `years` tables: the pre-break pattern with small value noise,
// the rewired pattern from the break year on.
std::vector<OutputTable> generate_series(const SynthParams& p, int years);

} // namespace indnet
