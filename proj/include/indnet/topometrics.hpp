#pragma once

// Threshold-graph derivation and the redundancy / residuality
// coefficients.

#include <optional>
#include <string>
#include <vector>

#include "indnet/mstcluster.hpp"
#include "indnet/netbuild.hpp"

namespace indnet {

// 0/1 adjacency marking pairs within the threshold distance. The
// boundary rule is <= throughout, so all MST edges qualify.
struct BooleanAdjacency {
    std::vector<std::string> ids;
    std::vector<char> unit; // n x n, row-major, symmetric, false diagonal
    double threshold_used = 0.0;

    std::size_t n() const { return ids.size(); }
    bool at(std::size_t i, std::size_t j) const { return unit[i * ids.size() + j] != 0; }
};

struct YearMetrics {
    int year = 0;
    double threshold = 0.0;            // L
    std::optional<int> replaced;       // RL vs previous year, absent for the first
    int redundancy = 0;                // S
    double residuality = 0.0;          // R
};

struct TopoReport {
    std::vector<YearMetrics> rows;
    std::vector<BooleanAdjacency> adjacency; // one per year
};

struct YearNetwork {
    int year = 0;
    DistanceMatrix distances;
    SpanningTree tree;
};

// S = m - (n-1) where m counts unordered finite pairs with d <= L.
// m < n-1 means the threshold is inconsistent with a valid clustering
// and raises ConsistencyError.
int redundancy(const DistanceMatrix& d, double threshold);

// R = sum of weights (1/d) strictly above L over sum at or below L.
// Unreachable pairs contribute 0 to the numerator.
double residuality(const DistanceMatrix& d, double threshold);

BooleanAdjacency boolean_graph(const DistanceMatrix& d, double threshold);

// Per-year L, S, R plus RL between consecutive trees. All years must
// share one industry set.
TopoReport build_report(const std::vector<YearNetwork>& series);

std::string report_json(const TopoReport& r);
std::string report_csv(const TopoReport& r);

// Black/white grid exports of a boolean graph.
std::string boolean_pgm(const BooleanAdjacency& a);
std::string boolean_csv(const BooleanAdjacency& a);

// Line charts of L, RL, S, R versus year.
std::string report_svg(const TopoReport& r);

} // namespace indnet
