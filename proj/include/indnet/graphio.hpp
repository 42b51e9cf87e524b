#pragma once

// DOT and GraphML export of spanning trees with node and edge attributes.

#include <map>
#include <optional>
#include <string>

#include "indnet/mstcluster.hpp"

namespace indnet {

struct NodeAttributes {
    std::map<std::string, double> total_output;        // table units
    std::map<std::string, double> gva;                 // optional, may be empty
    std::map<std::string, int> community;              // optional community index
    std::map<std::string, int> stable;                 // stable-core index, -1 unstable
};

// Edge attributes carry both the distance and its reciprocal weight.
std::string tree_dot(const SpanningTree& t, const NodeAttributes& attrs);
std::string tree_graphml(const SpanningTree& t, const NodeAttributes& attrs);

// Color for a community index (green/red/blue/yellow then a cycling
// palette); white for unstable.
std::string community_color(int index);

} // namespace indnet
