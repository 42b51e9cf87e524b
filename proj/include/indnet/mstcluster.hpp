#pragma once

// Single-linkage hierarchical clustering, MST extraction and the
// threshold distance, with an independent greedy-sort oracle.

#include <string>
#include <utility>
#include <vector>

#include "indnet/netbuild.hpp"

namespace indnet {

struct MergeStep {
    int step = 0;           // 1..n-1
    double distance = 0.0;  // min inter-cluster pairwise distance at this step
    std::vector<std::string> cluster_a;
    std::vector<std::string> cluster_b;
    std::pair<std::string, std::string> realizing_pair;
};

struct MergeSequence {
    std::vector<MergeStep> steps;
};

struct TreeEdge {
    std::string a; // canonical order: index(a) < index(b)
    std::string b;
    double distance = 0.0;
};

struct SpanningTree {
    std::vector<std::string> ids;
    std::vector<TreeEdge> edges; // n-1 edges
    double threshold = 0.0;      // max edge distance, the threshold L
};

// Nearest-neighbor clustering of the distance matrix. The tree's edges
// are the realizing pairs of the merges; threshold is the max merge
// distance. Ties break on the lexicographically smallest
// (min index, max index) pair in canonical industry order.
// Throws ConnectivityError when the finite-distance graph is
// disconnected, naming the components.
std::pair<MergeSequence, SpanningTree> single_linkage(const DistanceMatrix& d);

// Kruskal with the same tie-break: sort finite pairs ascending and add
// acyclic edges greedily. Independent check of single_linkage.
SpanningTree mst_oracle(const DistanceMatrix& d);

// Number of unordered id pairs present in `a` but not in `b`.
// Symmetric because both trees have n-1 edges.
int replaced_links(const SpanningTree& a, const SpanningTree& b);

} // namespace indnet
