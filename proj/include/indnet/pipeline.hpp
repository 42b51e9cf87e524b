#pragma once

// The end-to-end driver behind the CLI: ingestion -> networks -> MST ->
// metrics -> communities -> exports.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indnet/topometrics.hpp"

namespace indnet {

struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    std::string year_pattern = R"(\d{4})"; // regex extracting the year label from file names
    std::set<std::string> exclude = {"T", "U"};
    int min_products = 2;
    double sig_threshold = 1000.0; // table units; 10^6 euros
    double resolution = 1.0;
    std::filesystem::path out_dir = "out";
    std::set<std::string> formats = {"json", "csv"};
    int workers = 4;
    std::filesystem::path gva_file; // optional csv: industry,value
};

// Known export format names: json, csv, graphml, dot, svg, boolean-grid.
bool is_known_format(const std::string& f);

int year_from_filename(const std::filesystem::path& file, const std::string& pattern);

// Runs the full pipeline over all inputs and writes the selected
// exports. Output is atomic: files land in a temporary directory and are
// moved into place only on success. Returns a process exit status;
// errors go to `diag`.
int run_analyze(const RunConfig& cfg, std::ostream& diag);

// Generates a synthetic series from a JSON params file: one table file
// per year plus a ground-truth manifest. `years` <= 0 falls back to the
// params file's "years" key (default 15).
int run_synth(const std::filesystem::path& params_file, int years,
              const std::filesystem::path& out_dir, std::ostream& diag,
              std::optional<std::uint64_t> seed_override = std::nullopt);

// Per-industry product counts (total and significant) per input year,
// as CSV files.
int run_counts(const RunConfig& cfg, std::ostream& diag);

// Weight/distance matrices and trees for each input year.
int run_export(const RunConfig& cfg, std::ostream& diag);

} // namespace indnet
