#include "indnet/synthkit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <json.hpp>

namespace indnet {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
    // splitmix64 over seed xor tag; stable sub-stream derivation.
    std::uint64_t z = seed ^ (tag * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// mt19937_64 plus explicit transforms, so the stream does not depend on
// the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t s) : eng(s) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; } // [0,1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    double expo() { return -std::log(1.0 - uniform()); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
};

std::vector<IndustryGroup> effective_groups(const SynthParams& p) {
    if (!p.groups.empty()) return p.groups;
    // Four roughly equal groups.
    std::vector<IndustryGroup> gs(4);
    for (int i = 0; i < p.n_industries; ++i) gs[i % 4].members.push_back(i);
    for (auto& g : gs) g.p_intra = 0.6;
    return gs;
}

// Pattern: per industry, the set of extra (non-main) product indices.
using Pattern = std::vector<std::set<int>>;

Pattern base_pattern(const SynthParams& p, Rng& rng) {
    const auto groups = effective_groups(p);
    std::vector<int> group_of(p.n_industries, -1);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (int m : groups[g].members) group_of[m] = static_cast<int>(g);

    Pattern pat(p.n_industries);
    for (int i = 0; i < p.n_industries; ++i) {
        // Raw probabilities from the block structure, scaled so the
        // expected extra-product count matches diversification - 1.
        std::vector<double> q(p.n_products, 0.0);
        double sum = 0.0;
        for (int k = 0; k < p.n_products; ++k) {
            if (k == i) continue; // main product handled separately
            bool same_group = k < p.n_industries && group_of[i] >= 0 && group_of[k] == group_of[i];
            q[k] = same_group ? groups[group_of[i]].p_intra : p.p_inter;
            sum += q[k];
        }
        double scale = sum > 0 ? (p.diversification - 1.0) / sum : 0.0;
        for (int k = 0; k < p.n_products; ++k)
            if (k != i && rng.uniform() < std::min(0.95, q[k] * scale)) pat[i].insert(k);
        if (pat[i].empty()) {
            // Force at least one inter-industry relation.
            int pick = i == 0 ? 1 : 0;
            for (int k = 0; k < p.n_products; ++k)
                if (k != i && k < p.n_industries && group_of[k] == group_of[i]) {
                    pick = k;
                    break;
                }
            pat[i].insert(pick);
        }
    }
    return pat;
}

// How far a shocked industry's non-main output budget shrinks.
constexpr double kShockConcentration = 0.15;

// The structural break is a concentration shock: each industry is hit
// with probability `shock`; a hit industry retreats toward its main
// product (its shared-output budget shrinks by kShockConcentration) and
// drops each shared relation with probability `shock`, keeping at least
// one. Links between unshocked industries are untouched, so the shock
// weakens the shocked industries' ties, lengthens the threshold
// distance and rewires their tree attachments.
std::pair<Pattern, std::vector<char>> rewire_pattern(const SynthParams& p, const Pattern& base,
                                                     Rng& rng) {
    Pattern pat(p.n_industries);
    std::vector<char> shocked(p.n_industries, 0);
    for (int i = 0; i < p.n_industries; ++i) {
        if (rng.uniform() >= p.shock) {
            pat[i] = base[i];
            continue;
        }
        shocked[i] = 1;
        std::set<int> next;
        for (int k : base[i])
            if (rng.uniform() >= p.shock) next.insert(k);
        if (next.empty()) next.insert(*base[i].begin());
        pat[i] = std::move(next);
    }
    return {std::move(pat), std::move(shocked)};
}

// Values come from per-industry and per-cell hashed sub-streams, so a
// pattern change (the break) leaves the values of the surviving cells
// alone up to renormalization. The break is then purely structural.
OutputTable table_from_pattern(const SynthParams& p, const Pattern& pat, int year_label,
                               std::uint64_t value_seed,
                               const std::vector<char>* shocked = nullptr) {
    OutputTable t;
    t.year = year_label;
    auto label = [](char prefix, int k) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%c%02d", prefix, k + 1);
        return std::string(buf);
    };
    for (int i = 0; i < p.n_industries; ++i) t.industries.push_back(label('I', i));
    for (int k = 0; k < p.n_products; ++k)
        t.products.push_back(k < p.n_industries ? label('I', k) : label('P', k));

    t.values.assign(static_cast<std::size_t>(p.n_industries) * p.n_products, 0.0);
    t.missing.assign(t.values.size(), 0);
    for (int i = 0; i < p.n_industries; ++i) {
        Rng row_rng(mix(value_seed, 0x10000u + static_cast<std::uint64_t>(i)));
        double total = std::exp(p.value_mu + p.value_sigma * row_rng.normal());
        double main_share = row_rng.uniform(0.4, 0.8);
        if (shocked && (*shocked)[static_cast<std::size_t>(i)])
            main_share = 1.0 - (1.0 - main_share) * kShockConcentration;
        std::vector<double> props;
        double prop_sum = 0.0;
        for (int k : pat[i]) {
            Rng cell_rng(mix(value_seed, (static_cast<std::uint64_t>(i) << 20) ^
                                             static_cast<std::uint64_t>(k)));
            props.push_back(cell_rng.expo());
            prop_sum += props.back();
        }
        t.value(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = total * main_share;
        std::size_t idx = 0;
        for (int k : pat[i]) {
            t.value(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                total * (1.0 - main_share) * props[idx] / prop_sum;
            ++idx;
        }
    }
    return t;
}

bool post_break(const SynthParams& p, int year_index) {
    return p.break_year && p.shock > 0 && year_index >= *p.break_year;
}

} // namespace

void validate(const SynthParams& p) {
    if (p.n_industries < 3) throw DomainError("need at least 3 industries");
    if (p.n_products < p.n_industries)
        throw DomainError("need at least one product per industry (self-coded)");
    if (p.shock < 0 || p.shock > 1) throw DomainError("shock must be in [0,1]");
    if (p.p_inter < 0 || p.p_inter > 1) throw DomainError("p_inter must be in [0,1]");
    if (p.diversification < 2) throw DomainError("diversification must be at least 2");
    if (p.noise_sigma < 0) throw DomainError("noise_sigma must be non-negative");
    if (p.break_year && *p.break_year < 1) throw DomainError("break_year must be positive");
    std::set<int> seen;
    for (const auto& g : p.groups) {
        if (g.p_intra < 0 || g.p_intra > 1) throw DomainError("p_intra must be in [0,1]");
        for (int m : g.members) {
            if (m < 0 || m >= p.n_industries) throw DomainError("group member out of range");
            if (!seen.insert(m).second) throw DomainError("industry in two groups");
        }
    }
}

OutputTable generate_table(const SynthParams& p, int year_index) {
    validate(p);
    if (year_index < 1) throw DomainError("year index starts at 1");

    Rng pattern_rng(mix(p.seed, 1));
    Pattern base = base_pattern(p, pattern_rng);

    int year_label = p.start_year + year_index - 1;
    // One value stream for both regimes: the break only adds relations.
    std::uint64_t value_seed = mix(p.seed, 2);
    if (!post_break(p, year_index)) return table_from_pattern(p, base, year_label, value_seed);
    Rng rewire_rng(mix(p.seed, 3));
    auto [post, shocked] = rewire_pattern(p, base, rewire_rng);
    return table_from_pattern(p, post, year_label, value_seed, &shocked);
}

std::vector<OutputTable> generate_series(const SynthParams& p, int years) {
    validate(p);
    if (years < 2) throw DomainError("a series needs at least 2 years");
    if (p.break_year && (*p.break_year < 1 || *p.break_year > years))
        throw DomainError("break_year outside the series range");

    std::vector<OutputTable> out;
    for (int t = 1; t <= years; ++t) {
        OutputTable tbl = generate_table(p, t);
        if (p.noise_sigma > 0) {
            // Small multiplicative noise on positive cells; the product
            // pattern itself never changes between breaks.
            Rng noise(mix(p.seed, 1000 + static_cast<std::uint64_t>(t)));
            for (auto& v : tbl.values)
                if (v > 0) v *= std::exp(p.noise_sigma * noise.normal());
        }
        out.push_back(std::move(tbl));
    }
    return out;
}

SynthParams synth_params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad params json: ") + e.what());
    }
    SynthParams p;
    p.n_industries = j.value("n_industries", p.n_industries);
    p.n_products = j.value("n_products", p.n_products);
    p.p_inter = j.value("p_inter", p.p_inter);
    p.diversification = j.value("diversification", p.diversification);
    p.value_mu = j.value("value_mu", p.value_mu);
    p.value_sigma = j.value("value_sigma", p.value_sigma);
    p.seed = j.value("seed", p.seed);
    p.shock = j.value("shock", p.shock);
    p.noise_sigma = j.value("noise_sigma", p.noise_sigma);
    p.start_year = j.value("start_year", p.start_year);
    if (j.contains("break_year") && !j["break_year"].is_null())
        p.break_year = j["break_year"].get<int>();
    if (j.contains("groups")) {
        for (const auto& g : j["groups"]) {
            IndustryGroup ig;
            ig.members = g.value("members", std::vector<int>{});
            ig.p_intra = g.value("p_intra", ig.p_intra);
            p.groups.push_back(std::move(ig));
        }
    }
    validate(p);
    return p;
}

std::string synth_params_to_json(const SynthParams& p) {
    nlohmann::ordered_json j;
    j["n_industries"] = p.n_industries;
    j["n_products"] = p.n_products;
    j["p_inter"] = p.p_inter;
    j["diversification"] = p.diversification;
    j["value_mu"] = p.value_mu;
    j["value_sigma"] = p.value_sigma;
    j["seed"] = p.seed;
    if (p.break_year)
        j["break_year"] = *p.break_year;
    else
        j["break_year"] = nullptr;
    j["shock"] = p.shock;
    j["noise_sigma"] = p.noise_sigma;
    j["start_year"] = p.start_year;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto& g : p.groups) {
        nlohmann::ordered_json gj;
        gj["members"] = g.members;
        gj["p_intra"] = g.p_intra;
        j["groups"].push_back(std::move(gj));
    }
    return j.dump(2) + "\n";
}

} // namespace indnet
