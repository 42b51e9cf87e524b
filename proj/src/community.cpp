#include "indnet/community.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "indnet/errors.hpp"

namespace indnet {

namespace {

// One level of the aggregated graph. Self weight s[u] holds the total
// internal weight of the original nodes collapsed into u (unordered pairs).
struct LevelGraph {
    std::vector<std::map<std::size_t, double>> adj; // u -> {v != u: weight}
    std::vector<double> self;

    std::size_t size() const { return adj.size(); }
    double degree(std::size_t u) const {
        double k = 2.0 * self[u];
        for (const auto& [v, w] : adj[u]) k += w;
        return k;
    }
};

// Local-moving phase in node order; returns the community label per node.
// Deterministic: candidates are visited in increasing label order and a
// move needs a strictly positive gain over staying put.
std::vector<std::size_t> local_moving(const LevelGraph& g, double m2, double gamma) {
    const std::size_t n = g.size();
    std::vector<std::size_t> comm(n);
    for (std::size_t i = 0; i < n; ++i) comm[i] = i;
    std::vector<double> tot(n);
    for (std::size_t i = 0; i < n; ++i) tot[i] = g.degree(i);

    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t u = 0; u < n; ++u) {
            const double ku = g.degree(u);
            const std::size_t old = comm[u];
            tot[old] -= ku;

            // Links from u into each adjacent community.
            std::map<std::size_t, double> k_in;
            k_in[old]; // staying is always a candidate
            for (const auto& [v, w] : g.adj[u]) k_in[comm[v]] += w;

            std::size_t best = old;
            double best_gain = 2.0 * k_in[old] / m2 - gamma * 2.0 * tot[old] * ku / (m2 * m2);
            for (const auto& [c, kin] : k_in) {
                if (c == old) continue;
                double gain = 2.0 * kin / m2 - gamma * 2.0 * tot[c] * ku / (m2 * m2);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += ku;
            if (best != old) {
                comm[u] = best;
                moved = true;
            }
        }
    }
    return comm;
}

// Relabels communities contiguously by first appearance.
std::vector<std::size_t> compact_labels(const std::vector<std::size_t>& comm) {
    std::map<std::size_t, std::size_t> remap;
    std::vector<std::size_t> out(comm.size());
    for (std::size_t i = 0; i < comm.size(); ++i) {
        auto [it, inserted] = remap.emplace(comm[i], remap.size());
        out[i] = it->second;
    }
    return out;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::size_t>& comm,
                     std::size_t n_comms) {
    LevelGraph out;
    out.adj.resize(n_comms);
    out.self.assign(n_comms, 0.0);
    for (std::size_t u = 0; u < g.size(); ++u) {
        out.self[comm[u]] += g.self[u];
        for (const auto& [v, w] : g.adj[u]) {
            if (v <= u) continue; // each undirected edge once
            if (comm[u] == comm[v])
                out.self[comm[u]] += w;
            else {
                out.adj[comm[u]][comm[v]] += w;
                out.adj[comm[v]][comm[u]] += w;
            }
        }
    }
    return out;
}

} // namespace

int Partition::n_communities() const {
    std::set<int> c;
    for (const auto& [id, idx] : assignment) c.insert(idx);
    return static_cast<int>(c.size());
}

double modularity(const WeightMatrix& w, const Partition& p, double resolution) {
    const std::size_t n = w.n();
    for (const auto& id : w.ids)
        if (!p.assignment.count(id)) throw DomainError("partition misses industry " + id);

    std::vector<double> k(n, 0.0);
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                k[i] += w.at(i, j);
                m2 += w.at(i, j);
            }
    if (m2 <= 0) return 0.0;

    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.assignment.at(w.ids[i]) != p.assignment.at(w.ids[j])) continue;
            double wij = i == j ? 0.0 : w.at(i, j);
            q += wij - resolution * k[i] * k[j] / m2;
        }
    return q / m2;
}

Partition detect_communities(const WeightMatrix& w, double resolution, int max_passes) {
    const std::size_t n = w.n();
    if (resolution <= 0) throw DomainError("resolution must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (w.at(i, j) < 0) throw DomainError("weights must be non-negative");
            if (w.at(i, j) != w.at(j, i)) throw DomainError("weight matrix must be symmetric");
        }

    Partition p;
    double m2 = 0.0;
    LevelGraph g;
    g.adj.resize(n);
    g.self.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (w.at(i, j) > 0) {
                g.adj[i][j] = w.at(i, j);
                g.adj[j][i] = w.at(i, j);
                m2 += 2.0 * w.at(i, j);
            }

    if (m2 <= 0) {
        // Isolated nodes: everyone their own community.
        for (std::size_t i = 0; i < n; ++i) p.assignment[w.ids[i]] = static_cast<int>(i);
        p.modularity_score = 0.0;
        return p;
    }

    // orig_comm[i]: current level-graph node of original node i.
    std::vector<std::size_t> orig_comm(n);
    for (std::size_t i = 0; i < n; ++i) orig_comm[i] = i;

    for (int pass = 0; pass < max_passes; ++pass) {
        auto comm = compact_labels(local_moving(g, m2, resolution));
        std::size_t n_comms = *std::max_element(comm.begin(), comm.end()) + 1;

        for (std::size_t i = 0; i < n; ++i) orig_comm[i] = comm[orig_comm[i]];

        Partition snapshot;
        for (std::size_t i = 0; i < n; ++i)
            snapshot.assignment[w.ids[i]] = static_cast<int>(orig_comm[i]);
        p.pass_scores.push_back(modularity(w, snapshot, resolution));

        if (n_comms == g.size()) break; // nothing merged, done
        g = aggregate(g, comm, n_comms);
    }

    // Final labels contiguous in canonical industry order.
    std::map<std::size_t, int> remap;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, ins] = remap.emplace(orig_comm[i], static_cast<int>(remap.size()));
        p.assignment[w.ids[i]] = it->second;
    }
    p.modularity_score = p.pass_scores.back();
    return p;
}

namespace {

// Greedy maximal-Jaccard relabeling of `part` against reference
// communities; leftover communities get fresh indices.
std::map<std::string, int> align_to(const std::map<std::string, int>& ref,
                                    const std::map<std::string, int>& part) {
    std::map<int, std::set<std::string>> ref_groups, groups;
    for (const auto& [id, c] : ref) ref_groups[c].insert(id);
    for (const auto& [id, c] : part) groups[c].insert(id);

    struct Cand {
        double jaccard;
        int ref_c, c;
    };
    std::vector<Cand> cands;
    for (const auto& [rc, rset] : ref_groups)
        for (const auto& [c, set] : groups) {
            std::size_t inter = 0;
            for (const auto& id : set) inter += rset.count(id);
            double uni = static_cast<double>(rset.size() + set.size() - inter);
            if (inter > 0) cands.push_back({inter / uni, rc, c});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.jaccard != b.jaccard) return a.jaccard > b.jaccard;
        if (a.ref_c != b.ref_c) return a.ref_c < b.ref_c;
        return a.c < b.c;
    });

    std::map<int, int> relabel;
    std::set<int> used_ref;
    for (const auto& cd : cands) {
        if (relabel.count(cd.c) || used_ref.count(cd.ref_c)) continue;
        relabel[cd.c] = cd.ref_c;
        used_ref.insert(cd.ref_c);
    }
    int next = 0;
    for (const auto& [rc, s] : ref_groups) next = std::max(next, rc + 1);
    for (const auto& [c, s] : groups)
        if (!relabel.count(c)) relabel[c] = next++;

    std::map<std::string, int> out;
    for (const auto& [id, c] : part) out[id] = relabel.at(c);
    return out;
}

} // namespace

std::map<std::string, int> stable_core(const std::vector<std::pair<int, Partition>>& by_year) {
    if (by_year.size() < 2) throw DomainError("stable core needs at least 2 years");

    std::vector<std::string> ids;
    for (const auto& [id, c] : by_year.front().second.assignment) ids.push_back(id);
    for (const auto& [year, part] : by_year) {
        if (part.assignment.size() != ids.size())
            throw DomainError("partitions cover different industry sets");
        for (const auto& id : ids)
            if (!part.assignment.count(id))
                throw DomainError("year " + std::to_string(year) + " misses industry " + id);
    }

    const std::size_t n = ids.size();
    auto same = [&](const Partition& p, std::size_t i, std::size_t j) {
        return p.assignment.at(ids[i]) == p.assignment.at(ids[j]);
    };

    // varies[i][j]: co-membership of (i,j) differs between some two years.
    std::vector<std::vector<bool>> varies(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool first = same(by_year[0].second, i, j);
            for (std::size_t t = 1; t < by_year.size(); ++t)
                if (same(by_year[t].second, i, j) != first) {
                    varies[i][j] = varies[j][i] = true;
                    break;
                }
        }

    // Peel off the worst offender until the remaining set is consistent.
    std::set<std::size_t> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.insert(i);
    while (true) {
        std::size_t worst = n;
        std::size_t worst_count = 0;
        for (auto i : candidates) {
            std::size_t cnt = 0;
            for (auto j : candidates)
                if (j != i && varies[i][j]) ++cnt;
            if (cnt > worst_count || (cnt == worst_count && cnt > 0 && i > worst)) {
                worst_count = cnt;
                worst = i;
            }
        }
        if (worst_count == 0) break;
        candidates.erase(worst);
    }

    // Indices come from the first year, with later years aligned to it by
    // maximal overlap (alignment affects labels only, not stability).
    std::map<std::string, int> out;
    const auto& first = by_year.front().second.assignment;
    for (std::size_t i = 0; i < n; ++i)
        out[ids[i]] = candidates.count(i) ? first.at(ids[i]) : kUnstableCommunity;
    return out;
}

std::vector<Partition> align_partitions(const std::vector<Partition>& by_year) {
    std::vector<Partition> out;
    if (by_year.empty()) return out;
    out.push_back(by_year.front());
    for (std::size_t t = 1; t < by_year.size(); ++t) {
        Partition p = by_year[t];
        p.assignment = align_to(out.front().assignment, by_year[t].assignment);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace indnet
