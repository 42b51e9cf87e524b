#pragma once

// Normalized output shares, the weighted inter-industry proximity
// network, the distance matrix and the underlying bipartite graph.

#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "indnet/ingest.hpp"

namespace indnet {

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Per-mille output shares; every row sums to 1000.
struct NormalizedTable {
    int year = 0;
    std::vector<std::string> industries;
    std::vector<std::string> products;
    std::vector<double> shares; // row-major

    std::size_t n_industries() const { return industries.size(); }
    std::size_t n_products() const { return products.size(); }
    double share(std::size_t i, std::size_t p) const { return shares[i * products.size() + p]; }
};

// Symmetric matrix of link weights n_(a,b) = sum_k p_ak p_bk. The
// diagonal is computed but never consumed downstream.
struct WeightMatrix {
    std::vector<std::string> ids;
    std::vector<double> w; // n x n, row-major

    std::size_t n() const { return ids.size(); }
    double at(std::size_t a, std::size_t b) const { return w[a * ids.size() + b]; }
    double& at(std::size_t a, std::size_t b) { return w[a * ids.size() + b]; }
};

// Elementwise reciprocal of the weights; zero-weight pairs and the
// diagonal carry kUnreachable.
struct DistanceMatrix {
    std::vector<std::string> ids;
    std::vector<double> d; // n x n, row-major

    std::size_t n() const { return ids.size(); }
    double at(std::size_t a, std::size_t b) const { return d[a * ids.size() + b]; }
    double& at(std::size_t a, std::size_t b) { return d[a * ids.size() + b]; }
    bool reachable(std::size_t a, std::size_t b) const { return std::isfinite(at(a, b)); }
};

struct BipartiteGraph {
    std::vector<std::string> industry_nodes;
    std::vector<std::string> product_nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (industry idx, product idx)
};

// Unordered industry-index pairs (a < b).
using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

NormalizedTable normalize_rows(const OutputTable& t);

WeightMatrix similarity_weights(const NormalizedTable& nt);

DistanceMatrix distance_matrix(const WeightMatrix& w);

// Bipartite graph of positive-output cells plus its one-mode projection:
// (a,b) is in the projection iff some product is positive in both rows.
std::pair<BipartiteGraph, PairSet> bipartite_and_projection(const OutputTable& t);

// Square CSV with industry-id header row/column. Unreachable distances
// are written as "inf".
std::string matrix_csv(const std::vector<std::string>& ids, const std::vector<double>& data);

} // namespace indnet
