#pragma once

// Independent test oracles: brute-force spanning tree enumeration via
// Pruefer sequences, an exhaustive MST optimality certificate, and full
// set-partition search for modularity. None of these share code with the
// library paths they check.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "indnet/community.hpp"
#include "indnet/mstcluster.hpp"
#include "indnet/netbuild.hpp"

namespace oracles {

using indnet::DistanceMatrix;
using indnet::SpanningTree;
using indnet::WeightMatrix;

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

inline std::vector<std::string> make_ids(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("N" + std::to_string(i));
    return ids;
}

inline DistanceMatrix make_distances(std::size_t n) {
    DistanceMatrix d;
    d.ids = make_ids(n);
    d.d.assign(n * n, indnet::kUnreachable);
    return d;
}

inline EdgeSet edge_set(const SpanningTree& t) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < t.ids.size(); ++i) idx[t.ids[i]] = i;
    EdgeSet out;
    for (const auto& e : t.edges) {
        auto a = idx.at(e.a), b = idx.at(e.b);
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

// Decodes a Pruefer sequence into the labelled tree's edge set.
inline EdgeSet pruefer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
    std::vector<int> degree(n, 1);
    for (auto s : seq) ++degree[s];
    EdgeSet edges;
    std::set<std::size_t> leaves;
    for (std::size_t i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    std::vector<std::size_t> work = seq;
    for (auto s : work) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1) leaves.insert(s);
    }
    std::size_t a = *leaves.begin();
    std::size_t b = *std::next(leaves.begin());
    edges.emplace(std::min(a, b), std::max(a, b));
    return edges;
}

// Exhaustive minimum over all n^(n-2) labelled spanning trees. Trees
// using an unreachable pair are skipped. Practical for n <= 8.
inline EdgeSet brute_force_mst(const DistanceMatrix& d) {
    const std::size_t n = d.n();
    if (n == 2) return {{0, 1}};
    std::vector<std::size_t> seq(n - 2, 0);
    double best = indnet::kUnreachable;
    EdgeSet best_edges;
    while (true) {
        EdgeSet edges = pruefer_decode(seq, n);
        double total = 0.0;
        bool ok = true;
        for (const auto& [a, b] : edges) {
            if (!d.reachable(a, b)) {
                ok = false;
                break;
            }
            total += d.at(a, b);
        }
        if (ok && total < best) {
            best = total;
            best_edges = edges;
        }
        // next sequence
        std::size_t pos = 0;
        while (pos < seq.size() && seq[pos] == n - 1) seq[pos++] = 0;
        if (pos == seq.size()) break;
        ++seq[pos];
    }
    return best_edges;
}

// Exact optimality certificate for unique weights: every non-tree finite
// pair must be strictly heavier than every edge on the tree path between
// its endpoints. Checks all pairs; no shortcuts shared with Kruskal.
inline bool mst_certificate(const DistanceMatrix& d, const SpanningTree& t) {
    const std::size_t n = d.n();
    auto edges = edge_set(t);
    if (edges.size() != n - 1) return false;

    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // max edge distance on the tree path between every pair, by BFS/DFS from each node
    std::vector<std::vector<double>> path_max(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack = {s};
        seen[s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : adj[u]) {
                if (seen[v]) continue;
                seen[v] = true;
                path_max[s][v] = std::max(path_max[s][u], d.at(u, v));
                stack.push_back(v);
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (edges.count({a, b})) continue;
            if (!d.reachable(a, b)) continue;
            if (!(d.at(a, b) > path_max[a][b])) return false;
        }
    return true;
}

// All set partitions of {0..n-1} as restricted growth strings; n <= 8.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxc) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int c = 0; c <= maxc + 1; ++c) {
            a[i] = c;
            rec(i + 1, std::max(maxc, c));
        }
    };
    rec(0, -1);
    return out;
}

// Modularity maximum by full enumeration over partitions.
inline std::pair<double, std::vector<int>> best_partition_exhaustive(const WeightMatrix& w,
                                                                    double resolution) {
    double best = -1e18;
    std::vector<int> best_p;
    for (const auto& labels : all_partitions(static_cast<int>(w.n()))) {
        indnet::Partition p;
        for (std::size_t i = 0; i < w.n(); ++i) p.assignment[w.ids[i]] = labels[i];
        double q = indnet::modularity(w, p, resolution);
        if (q > best) {
            best = q;
            best_p = labels;
        }
    }
    return {best, best_p};
}

// Random complete distance matrix with pairwise-distinct distances.
inline DistanceMatrix random_distances(std::mt19937_64& rng, std::size_t n) {
    DistanceMatrix d = make_distances(n);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double v = u(rng);
            d.at(a, b) = v;
            d.at(b, a) = v;
        }
    return d;
}

} // namespace oracles
