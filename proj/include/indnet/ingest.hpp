#pragma once

// Parsing and filtering of industry/product output tables and the
// industry/product classification list.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "indnet/errors.hpp"

namespace indnet {

// One year's industry x product matrix of production values
// (table units: 10^3 euros). Cells reported as "-" or empty are stored
// as 0 with the missing mask set; downstream math treats them as 0.
struct OutputTable {
    int year = 0;
    std::vector<std::string> industries; // row ids, file order
    std::vector<std::string> products;   // column ids, file order
    std::vector<double> values;          // row-major, industries x products
    std::vector<char> missing;           // same shape

    std::size_t n_industries() const { return industries.size(); }
    std::size_t n_products() const { return products.size(); }

    double value(std::size_t i, std::size_t p) const { return values[i * products.size() + p]; }
    double& value(std::size_t i, std::size_t p) { return values[i * products.size() + p]; }
    bool is_missing(std::size_t i, std::size_t p) const { return missing[i * products.size() + p] != 0; }

    // Sum of one industry's row.
    double row_total(std::size_t i) const;

    // Index of an industry id, or nullopt.
    std::optional<std::size_t> industry_index(std::string_view id) const;
};

struct ClassificationEntry {
    std::string code_range;
    std::string description;
    std::string industry_id;
    std::string product_id;
};

// The NACE/CPA classification list; industry and product id sets coincide.
struct Classification {
    std::vector<ClassificationEntry> entries;
};

struct ProductCount {
    std::string industry;
    int count_all = 0;         // products with positive output
    int count_significant = 0; // products with output strictly above threshold
};

struct ProductCountSummary {
    std::vector<ProductCount> per_industry;
    double threshold = 0.0; // in table units
};

// Parses a delimited table: header row of product ids, one row per
// industry, first column the industry id. Delimiter (',' or ';') is
// auto-detected from the header. "-" and empty cells are missing.
OutputTable parse_output_table(std::string_view raw, int year);

// Inverse of parse_output_table up to delimiter choice; missing cells
// are written back as "-".
std::string serialize_output_table(const OutputTable& t, char delim = ',');

OutputTable read_output_table_file(const std::filesystem::path& file, int year);

// Four-column delimited text matching the classification list layout:
// code-range, description, industry-id, product-id.
Classification parse_classification(std::string_view raw);

// Drops the rows in `excluded` plus any industry with fewer than
// `min_products` positively produced products. Product columns are kept
// so products stay shared coordinates across years. Industry order is
// preserved. Fewer than 3 surviving industries is an error.
OutputTable apply_exclusions(const OutputTable& t, const std::set<std::string>& excluded,
                             int min_products);

// Per-industry product counts, total and above-threshold (strict).
ProductCountSummary product_counts(const OutputTable& t, double threshold);

std::string product_counts_csv(const ProductCountSummary& s);

} // namespace indnet
