#pragma once

// Modularity-based community detection on the weighted industry network
// and cross-year membership-stability analysis.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "indnet/netbuild.hpp"

namespace indnet {

struct Partition {
    std::map<std::string, int> assignment; // industry id -> community index, contiguous from 0
    double modularity_score = 0.0;
    std::vector<double> pass_scores; // modularity after each aggregation pass

    int n_communities() const;
};

// Greedy modularity optimization (local moving + aggregation passes),
// visiting nodes in canonical industry order; deterministic for fixed
// inputs. An all-zero weight matrix yields singletons with modularity 0.
Partition detect_communities(const WeightMatrix& w, double resolution = 1.0,
                             int max_passes = 16);

// Weighted modularity with resolution gamma, diagonal weights ignored.
double modularity(const WeightMatrix& w, const Partition& p, double resolution = 1.0);

// Stable industries keep the same co-membership with every other stable
// industry across all years. Returned index is the aligned community of
// the first year; kUnstableCommunity marks the rest. Community indices
// are matched across years to the first year by greedy maximal Jaccard
// overlap, ties broken by lower community index.
inline constexpr int kUnstableCommunity = -1;
std::map<std::string, int> stable_core(const std::vector<std::pair<int, Partition>>& by_year);

// Relabels every partition so community indices are comparable across
// years: greedy maximal-Jaccard match against the first year, ties broken
// by lower community index, unmatched communities get fresh indices.
std::vector<Partition> align_partitions(const std::vector<Partition>& by_year);

} // namespace indnet
