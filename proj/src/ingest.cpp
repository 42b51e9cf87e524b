#include "indnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace indnet {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> lines_of(std::string_view raw) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        auto pos = raw.find('\n', start);
        std::string_view line =
            pos == std::string_view::npos ? raw.substr(start) : raw.substr(start, pos - start);
        if (!trim(line).empty()) out.emplace_back(line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

char detect_delimiter(std::string_view header) {
    auto commas = std::count(header.begin(), header.end(), ',');
    auto semis = std::count(header.begin(), header.end(), ';');
    return semis > commas ? ';' : ',';
}

void check_unique(const std::vector<std::string>& ids, const char* kind) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second)
            throw FormatError(std::string("duplicate ") + kind + " id: " + id);
}

double parse_number(const std::string& cell, const std::string& industry) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || p != cell.data() + cell.size())
        throw FormatError("non-numeric cell '" + cell + "' in row " + industry);
    return v;
}

} // namespace

double OutputTable::row_total(std::size_t i) const {
    const double* row = values.data() + i * products.size();
    return std::accumulate(row, row + products.size(), 0.0);
}

std::optional<std::size_t> OutputTable::industry_index(std::string_view id) const {
    auto it = std::find(industries.begin(), industries.end(), id);
    if (it == industries.end()) return std::nullopt;
    return static_cast<std::size_t>(it - industries.begin());
}

OutputTable parse_output_table(std::string_view raw, int year) {
    auto rows = lines_of(raw);
    if (rows.size() < 2) throw FormatError("table needs a header and at least one industry row");

    char delim = detect_delimiter(rows[0]);
    auto header = split(rows[0], delim);
    if (header.size() < 2) throw FormatError("header has no product columns");

    OutputTable t;
    t.year = year;
    // First header field is the corner label (often empty); the rest are product ids.
    t.products.assign(header.begin() + 1, header.end());
    check_unique(t.products, "product");

    const std::size_t np = t.products.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto cells = split(rows[r], delim);
        if (cells.size() != np + 1)
            throw FormatError("ragged row '" + cells[0] + "': expected " + std::to_string(np + 1) +
                              " fields, got " + std::to_string(cells.size()));
        t.industries.push_back(cells[0]);
        for (std::size_t c = 1; c <= np; ++c) {
            const std::string& cell = cells[c];
            if (cell.empty() || cell == "-") {
                t.values.push_back(0.0);
                t.missing.push_back(1);
            } else {
                double v = parse_number(cell, cells[0]);
                if (v < 0)
                    throw DomainError("negative value " + cell + " in row " + cells[0]);
                t.values.push_back(v);
                t.missing.push_back(0);
            }
        }
    }
    check_unique(t.industries, "industry");
    return t;
}

std::string serialize_output_table(const OutputTable& t, char delim) {
    std::ostringstream os;
    os.precision(17);
    os << "industry";
    for (const auto& p : t.products) os << delim << p;
    os << '\n';
    for (std::size_t i = 0; i < t.n_industries(); ++i) {
        os << t.industries[i];
        for (std::size_t p = 0; p < t.n_products(); ++p) {
            os << delim;
            if (t.is_missing(i, p))
                os << '-';
            else
                os << t.value(i, p);
        }
        os << '\n';
    }
    return os.str();
}

OutputTable read_output_table_file(const std::filesystem::path& file, int year) {
    std::ifstream in(file);
    if (!in) throw FormatError("cannot open " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_output_table(buf.str(), year);
}

Classification parse_classification(std::string_view raw) {
    Classification c;
    auto rows = lines_of(raw);
    if (rows.empty()) throw FormatError("empty classification file");
    char delim = detect_delimiter(rows[0]);
    for (const auto& row : rows) {
        auto cells = split(row, delim);
        if (cells.size() != 4)
            throw FormatError("classification rows need 4 columns, got " +
                              std::to_string(cells.size()));
        c.entries.push_back({cells[0], cells[1], cells[2], cells[3]});
    }
    std::vector<std::string> inds, prods;
    for (const auto& e : c.entries) {
        inds.push_back(e.industry_id);
        prods.push_back(e.product_id);
    }
    check_unique(inds, "industry");
    auto sorted_i = inds, sorted_p = prods;
    std::sort(sorted_i.begin(), sorted_i.end());
    std::sort(sorted_p.begin(), sorted_p.end());
    if (sorted_i != sorted_p)
        throw FormatError("industry and product id sets differ in classification");
    return c;
}

OutputTable apply_exclusions(const OutputTable& t, const std::set<std::string>& excluded,
                             int min_products) {
    if (min_products < 0) throw DomainError("min_products must be non-negative");
    for (const auto& id : excluded)
        if (!t.industry_index(id))
            throw DomainError("excluded industry '" + id + "' not in table");

    OutputTable out;
    out.year = t.year;
    out.products = t.products;
    for (std::size_t i = 0; i < t.n_industries(); ++i) {
        if (excluded.count(t.industries[i])) continue;
        int positive = 0;
        for (std::size_t p = 0; p < t.n_products(); ++p)
            if (t.value(i, p) > 0) ++positive;
        if (positive < min_products) continue;
        out.industries.push_back(t.industries[i]);
        auto begin = t.values.begin() + static_cast<std::ptrdiff_t>(i * t.n_products());
        out.values.insert(out.values.end(), begin, begin + static_cast<std::ptrdiff_t>(t.n_products()));
        auto mbegin = t.missing.begin() + static_cast<std::ptrdiff_t>(i * t.n_products());
        out.missing.insert(out.missing.end(), mbegin, mbegin + static_cast<std::ptrdiff_t>(t.n_products()));
    }
    if (out.n_industries() < 3)
        throw DegenerateInputError("only " + std::to_string(out.n_industries()) +
                                   " industries remain after exclusions");
    for (std::size_t i = 0; i < out.n_industries(); ++i)
        if (!(out.row_total(i) > 0))
            throw DomainError("industry " + out.industries[i] + " has zero total output");
    return out;
}

ProductCountSummary product_counts(const OutputTable& t, double threshold) {
    if (threshold < 0) throw DomainError("threshold must be non-negative");
    ProductCountSummary s;
    s.threshold = threshold;
    for (std::size_t i = 0; i < t.n_industries(); ++i) {
        ProductCount pc;
        pc.industry = t.industries[i];
        for (std::size_t p = 0; p < t.n_products(); ++p) {
            double v = t.value(i, p);
            if (v > 0) ++pc.count_all;
            if (v > threshold) ++pc.count_significant;
        }
        s.per_industry.push_back(pc);
    }
    return s;
}

std::string product_counts_csv(const ProductCountSummary& s) {
    std::ostringstream os;
    os << "industry,count_all,count_significant\n";
    for (const auto& pc : s.per_industry)
        os << pc.industry << ',' << pc.count_all << ',' << pc.count_significant << '\n';
    return os.str();
}

} // namespace indnet
