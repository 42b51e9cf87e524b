// indnet: proximity networks, MSTs and topological change metrics from
// industry/product output tables.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indnet/pipeline.hpp"

namespace {

struct CommonOpts {
    std::vector<std::string> inputs;
    std::vector<std::string> exclude;
    std::vector<std::string> formats;
};

void add_common(CLI::App* cmd, indnet::RunConfig& cfg, CommonOpts& opts) {
    cmd->add_option("--input,-i", opts.inputs, "input table files")->envname("INDNET_INPUT");
    cmd->add_option("--out,-o", cfg.out_dir, "output directory")->envname("INDNET_OUT");
    cmd->add_option("--year-pattern", cfg.year_pattern,
                    "regex extracting the year from file names")
        ->envname("INDNET_YEAR_PATTERN");
    cmd->add_option("--exclude", opts.exclude,
                    "industry ids to drop; 'none' clears the default T,U")
        ->delimiter(',')
        ->envname("INDNET_EXCLUDE");
    cmd->add_option("--min-products", cfg.min_products,
                    "drop industries with fewer positive products")
        ->envname("INDNET_MIN_PRODUCTS");
    cmd->add_option("--sig-threshold", cfg.sig_threshold,
                    "significance threshold in table units (default 1000 = 10^6 euros)")
        ->envname("INDNET_SIG_THRESHOLD");
    cmd->add_option("--resolution", cfg.resolution, "community detection resolution")
        ->envname("INDNET_RESOLUTION");
    cmd->add_option("--formats", opts.formats, "exports: json,csv,graphml,dot,svg,boolean-grid")
        ->delimiter(',')
        ->envname("INDNET_FORMATS");
    cmd->add_option("--workers", cfg.workers, "concurrent years")->envname("INDNET_WORKERS");
    cmd->add_option("--gva", cfg.gva_file, "optional csv of industry,gva node attributes")
        ->envname("INDNET_GVA");
}

void apply_common(indnet::RunConfig& cfg, const CommonOpts& opts) {
    for (const auto& i : opts.inputs) cfg.inputs.emplace_back(i);
    if (!opts.exclude.empty()) {
        cfg.exclude.clear();
        for (const auto& e : opts.exclude)
            if (!e.empty() && e != "none") cfg.exclude.insert(e);
    }
    if (!opts.formats.empty()) {
        cfg.formats.clear();
        for (const auto& f : opts.formats) cfg.formats.insert(f);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inter-industry proximity network toolkit"};
    app.require_subcommand(1);

    indnet::RunConfig cfg;
    CommonOpts opts;

    auto* analyze = app.add_subcommand(
        "analyze", "full pipeline: tables -> networks -> MSTs -> metrics -> communities");
    add_common(analyze, cfg, opts);

    auto* counts = app.add_subcommand("counts", "per-industry product counts");
    add_common(counts, cfg, opts);

    auto* exp = app.add_subcommand("export", "weight/distance matrices and trees per year");
    add_common(exp, cfg, opts);

    auto* synth = app.add_subcommand("synth", "generate a synthetic table series");
    std::string params_file;
    std::string synth_out = "synth_out";
    int years = 0;
    std::uint64_t seed = 0;
    synth->add_option("params", params_file, "JSON parameter file")->required();
    synth->add_option("--out,-o", synth_out, "output directory")->envname("INDNET_OUT");
    synth->add_option("--years", years, "series length (overrides params file)")
        ->envname("INDNET_YEARS");
    auto* seed_opt = synth->add_option("--seed", seed, "seed override")->envname("INDNET_SEED");

    CLI11_PARSE(app, argc, argv);

    apply_common(cfg, opts);

    if (analyze->parsed()) return indnet::run_analyze(cfg, std::cerr);
    if (counts->parsed()) return indnet::run_counts(cfg, std::cerr);
    if (exp->parsed()) return indnet::run_export(cfg, std::cerr);
    if (synth->parsed()) {
        std::optional<std::uint64_t> seed_override;
        if (seed_opt->count() > 0) seed_override = seed;
        return indnet::run_synth(params_file, years, synth_out, std::cerr, seed_override);
    }
    return 1;
}
