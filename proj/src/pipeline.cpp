#include "indnet/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <json.hpp>

#include "indnet/community.hpp"
#include "indnet/graphio.hpp"
#include "indnet/ingest.hpp"
#include "indnet/synthkit.hpp"

namespace indnet {

namespace fs = std::filesystem;

namespace {

const std::set<std::string> kFormats = {"json", "csv", "graphml", "dot", "svg", "boolean-grid"};

struct YearResult {
    int year = 0;
    OutputTable table;
    WeightMatrix weights;
    DistanceMatrix distances;
    SpanningTree tree;
    Partition partition;
};

std::string error_class(const std::exception& e) {
    if (dynamic_cast<const FormatError*>(&e)) return "format-error";
    if (dynamic_cast<const DegenerateInputError*>(&e)) return "degenerate-input-error";
    if (dynamic_cast<const ConnectivityError*>(&e)) return "connectivity-error";
    if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency-error";
    if (dynamic_cast<const DomainError*>(&e)) return "domain-error";
    return "error";
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw DomainError("cannot write " + p.string());
    out << content;
}

std::map<std::string, double> read_gva_csv(const fs::path& file) {
    std::map<std::string, double> gva;
    std::ifstream in(file);
    if (!in) throw FormatError("cannot open gva file " + file.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw FormatError("gva rows are 'industry,value'");
        std::string id = line.substr(0, comma);
        if (id == "industry") continue; // optional header
        gva[id] = std::stod(line.substr(comma + 1));
    }
    return gva;
}

// RAII staging directory: files accumulate next to the target and are
// renamed into place only when commit() runs, so a failed run never
// leaves a partial report.
struct StagingDir {
    fs::path tmp;
    fs::path target;
    bool committed = false;

    explicit StagingDir(const fs::path& out_dir) : target(out_dir) {
        fs::path parent = out_dir.has_parent_path() ? out_dir.parent_path() : fs::path(".");
        fs::create_directories(parent);
        tmp = parent / (".tmp-" + out_dir.filename().string() + "-" +
                        std::to_string(static_cast<unsigned>(::getpid())));
        fs::remove_all(tmp);
        fs::create_directories(tmp);
    }
    ~StagingDir() {
        if (!committed) {
            std::error_code ec;
            fs::remove_all(tmp, ec);
        }
    }
    void commit() {
        fs::create_directories(target);
        for (const auto& entry : fs::directory_iterator(tmp))
            fs::rename(entry.path(), target / entry.path().filename());
        fs::remove_all(tmp);
        committed = true;
    }
};

// Runs fn(i) for i in [0, count) on up to `workers` threads; the first
// exception, in index order, is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    auto run = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    for (int t = 0; t < std::min<int>(workers, static_cast<int>(count)); ++t)
        pool.emplace_back(run);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

YearResult analyze_one(const RunConfig& cfg, const fs::path& input) {
    YearResult r;
    r.year = year_from_filename(input, cfg.year_pattern);
    OutputTable raw = read_output_table_file(input, r.year);

    // Only exclude ids actually present; the default {T,U} set is
    // specific to the Portuguese tables.
    std::set<std::string> present;
    for (const auto& id : cfg.exclude)
        if (raw.industry_index(id)) present.insert(id);
    r.table = apply_exclusions(raw, present, cfg.min_products);

    NormalizedTable nt = normalize_rows(r.table);
    r.weights = similarity_weights(nt);
    r.distances = distance_matrix(r.weights);
    auto [seq, tree] = single_linkage(r.distances);
    r.tree = std::move(tree);
    r.partition = detect_communities(r.weights, cfg.resolution);
    return r;
}

} // namespace

bool is_known_format(const std::string& f) { return kFormats.count(f) > 0; }

int year_from_filename(const fs::path& file, const std::string& pattern) {
    std::regex re(pattern);
    std::smatch m;
    std::string name = file.filename().string();
    if (!std::regex_search(name, m, re))
        throw FormatError("no year matching /" + pattern + "/ in file name " + name);
    return std::stoi(m.str(m.size() > 1 ? 1 : 0));
}

int run_analyze(const RunConfig& cfg, std::ostream& diag) {
    try {
        if (cfg.inputs.empty()) throw DomainError("no input files");
        if (cfg.formats.empty()) throw DomainError("no export formats selected");
        for (const auto& f : cfg.formats)
            if (!is_known_format(f)) throw DomainError("unknown export format: " + f);
        if (cfg.workers < 1) throw DomainError("workers must be at least 1");

        std::map<std::string, double> gva;
        if (!cfg.gva_file.empty()) gva = read_gva_csv(cfg.gva_file);

        std::vector<YearResult> results(cfg.inputs.size());
        parallel_for(cfg.inputs.size(), cfg.workers,
                     [&](std::size_t i) { results[i] = analyze_one(cfg, cfg.inputs[i]); });

        std::sort(results.begin(), results.end(),
                  [](const YearResult& a, const YearResult& b) { return a.year < b.year; });
        for (std::size_t i = 1; i < results.size(); ++i)
            if (results[i].year == results[i - 1].year)
                throw DomainError("duplicate year " + std::to_string(results[i].year));

        std::vector<YearNetwork> series;
        for (auto& r : results) series.push_back({r.year, r.distances, r.tree});
        TopoReport report = build_report(series);

        std::vector<Partition> parts;
        for (const auto& r : results) parts.push_back(r.partition);
        std::vector<Partition> aligned = align_partitions(parts);
        std::map<std::string, int> stable;
        if (results.size() >= 2) {
            std::vector<std::pair<int, Partition>> by_year;
            for (std::size_t i = 0; i < results.size(); ++i)
                by_year.emplace_back(results[i].year, results[i].partition);
            stable = stable_core(by_year);
        }

        StagingDir stage(cfg.out_dir);
        if (cfg.formats.count("json")) write_file(stage.tmp / "report.json", report_json(report));
        if (cfg.formats.count("csv")) {
            write_file(stage.tmp / "report.csv", report_csv(report));
            std::ostringstream parts_csv;
            parts_csv << "year,industry,community,stable\n";
            for (std::size_t i = 0; i < results.size(); ++i)
                for (const auto& [id, c] : aligned[i].assignment) {
                    parts_csv << results[i].year << ',' << id << ',' << c << ',';
                    if (!stable.empty())
                        parts_csv << (stable.at(id) == kUnstableCommunity ? "no" : "yes");
                    parts_csv << '\n';
                }
            write_file(stage.tmp / "partitions.csv", parts_csv.str());
        }
        if (cfg.formats.count("svg")) write_file(stage.tmp / "metrics.svg", report_svg(report));

        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            std::string year = std::to_string(r.year);
            if (cfg.formats.count("graphml") || cfg.formats.count("dot")) {
                NodeAttributes attrs;
                for (std::size_t a = 0; a < r.table.n_industries(); ++a)
                    attrs.total_output[r.table.industries[a]] = r.table.row_total(a);
                for (const auto& [id, v] : gva)
                    if (r.table.industry_index(id)) attrs.gva[id] = v;
                attrs.community = aligned[i].assignment;
                if (!stable.empty()) attrs.stable = stable;
                if (cfg.formats.count("dot"))
                    write_file(stage.tmp / ("tree_" + year + ".dot"), tree_dot(r.tree, attrs));
                if (cfg.formats.count("graphml"))
                    write_file(stage.tmp / ("tree_" + year + ".graphml"),
                               tree_graphml(r.tree, attrs));
            }
            if (cfg.formats.count("boolean-grid")) {
                write_file(stage.tmp / ("bool_" + year + ".pbm"),
                           boolean_pgm(report.adjacency[i]));
                write_file(stage.tmp / ("bool_" + year + ".csv"),
                           boolean_csv(report.adjacency[i]));
            }
        }
        stage.commit();
        return 0;
    } catch (const std::exception& e) {
        diag << error_class(e) << ": " << e.what() << '\n';
        return 1;
    }
}

int run_synth(const fs::path& params_file, int years, const fs::path& out_dir,
              std::ostream& diag, std::optional<std::uint64_t> seed_override) {
    try {
        std::ifstream in(params_file);
        if (!in) throw FormatError("cannot open " + params_file.string());
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        SynthParams p = synth_params_from_json(text);
        if (seed_override) p.seed = *seed_override;
        if (years <= 0) years = nlohmann::json::parse(text).value("years", 15);

        auto series = generate_series(p, years);

        StagingDir stage(out_dir);
        nlohmann::ordered_json manifest;
        manifest["years"] = years;
        manifest["seed"] = p.seed;
        manifest["shock"] = p.shock;
        if (p.break_year) {
            manifest["break_index"] = *p.break_year;
            manifest["break_year"] = p.start_year + *p.break_year - 1;
        } else {
            manifest["break_index"] = nullptr;
            manifest["break_year"] = nullptr;
        }
        manifest["files"] = nlohmann::ordered_json::array();
        for (const auto& t : series) {
            std::string name = "table_" + std::to_string(t.year) + ".csv";
            write_file(stage.tmp / name, serialize_output_table(t));
            manifest["files"].push_back(name);
        }
        write_file(stage.tmp / "manifest.json", manifest.dump(2) + "\n");
        stage.commit();
        return 0;
    } catch (const std::exception& e) {
        diag << error_class(e) << ": " << e.what() << '\n';
        return 1;
    }
}

int run_counts(const RunConfig& cfg, std::ostream& diag) {
    try {
        if (cfg.inputs.empty()) throw DomainError("no input files");
        StagingDir stage(cfg.out_dir);
        for (const auto& input : cfg.inputs) {
            int year = year_from_filename(input, cfg.year_pattern);
            OutputTable t = read_output_table_file(input, year);
            auto counts = product_counts(t, cfg.sig_threshold);
            write_file(stage.tmp / ("counts_" + std::to_string(year) + ".csv"),
                       product_counts_csv(counts));
        }
        stage.commit();
        return 0;
    } catch (const std::exception& e) {
        diag << error_class(e) << ": " << e.what() << '\n';
        return 1;
    }
}

int run_export(const RunConfig& cfg, std::ostream& diag) {
    try {
        if (cfg.inputs.empty()) throw DomainError("no input files");
        StagingDir stage(cfg.out_dir);
        for (const auto& input : cfg.inputs) {
            YearResult r = analyze_one(cfg, input);
            std::string year = std::to_string(r.year);
            if (cfg.formats.count("csv")) {
                write_file(stage.tmp / ("weights_" + year + ".csv"),
                           matrix_csv(r.weights.ids, r.weights.w));
                write_file(stage.tmp / ("distances_" + year + ".csv"),
                           matrix_csv(r.distances.ids, r.distances.d));
            }
            NodeAttributes attrs;
            for (std::size_t a = 0; a < r.table.n_industries(); ++a)
                attrs.total_output[r.table.industries[a]] = r.table.row_total(a);
            attrs.community = r.partition.assignment;
            if (cfg.formats.count("dot"))
                write_file(stage.tmp / ("tree_" + year + ".dot"), tree_dot(r.tree, attrs));
            if (cfg.formats.count("graphml"))
                write_file(stage.tmp / ("tree_" + year + ".graphml"), tree_graphml(r.tree, attrs));
        }
        stage.commit();
        return 0;
    } catch (const std::exception& e) {
        diag << error_class(e) << ": " << e.what() << '\n';
        return 1;
    }
}

} // namespace indnet
