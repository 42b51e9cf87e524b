#include "indnet/graphio.hpp"

#include <array>
#include <sstream>

namespace indnet {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

template <typename T>
const T* lookup(const std::map<std::string, T>& m, const std::string& key) {
    auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
}

} // namespace

std::string community_color(int index) {
    if (index < 0) return "white";
    static const std::array<const char*, 8> palette = {
        "green", "red", "blue", "yellow", "pink", "orange", "purple", "cyan"};
    return palette[static_cast<std::size_t>(index) % palette.size()];
}

std::string tree_dot(const SpanningTree& t, const NodeAttributes& attrs) {
    std::ostringstream os;
    os.precision(17);
    os << "graph mst {\n";
    for (const auto& id : t.ids) {
        os << "  \"" << id << "\" [";
        bool first = true;
        auto emit = [&](const std::string& k, const std::string& v) {
            os << (first ? "" : ", ") << k << "=\"" << v << "\"";
            first = false;
        };
        if (const double* v = lookup(attrs.total_output, id)) emit("total_output", std::to_string(*v));
        if (const double* v = lookup(attrs.gva, id)) emit("gva", std::to_string(*v));
        if (const int* c = lookup(attrs.community, id)) emit("community", std::to_string(*c));
        if (const int* s = lookup(attrs.stable, id)) {
            emit("stable", *s == -1 ? "false" : "true");
            emit("color", community_color(*s));
        } else if (const int* c = lookup(attrs.community, id)) {
            emit("color", community_color(*c));
        }
        os << "];\n";
    }
    for (const auto& e : t.edges)
        os << "  \"" << e.a << "\" -- \"" << e.b << "\" [distance=\"" << e.distance
           << "\", weight=\"" << 1.0 / e.distance << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string tree_graphml(const SpanningTree& t, const NodeAttributes& attrs) {
    std::ostringstream os;
    os.precision(17);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"d_total\" for=\"node\" attr.name=\"total_output\" attr.type=\"double\"/>\n"
       << "  <key id=\"d_gva\" for=\"node\" attr.name=\"gva\" attr.type=\"double\"/>\n"
       << "  <key id=\"d_comm\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
       << "  <key id=\"d_color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n"
       << "  <key id=\"d_dist\" for=\"edge\" attr.name=\"distance\" attr.type=\"double\"/>\n"
       << "  <key id=\"d_weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
       << "  <graph edgedefault=\"undirected\">\n";
    for (const auto& id : t.ids) {
        os << "    <node id=\"" << xml_escape(id) << "\">\n";
        if (const double* v = lookup(attrs.total_output, id))
            os << "      <data key=\"d_total\">" << *v << "</data>\n";
        if (const double* v = lookup(attrs.gva, id))
            os << "      <data key=\"d_gva\">" << *v << "</data>\n";
        if (const int* c = lookup(attrs.community, id))
            os << "      <data key=\"d_comm\">" << *c << "</data>\n";
        if (const int* s = lookup(attrs.stable, id))
            os << "      <data key=\"d_color\">" << community_color(*s) << "</data>\n";
        else if (const int* c = lookup(attrs.community, id))
            os << "      <data key=\"d_color\">" << community_color(*c) << "</data>\n";
        os << "    </node>\n";
    }
    int eid = 0;
    for (const auto& e : t.edges) {
        os << "    <edge id=\"e" << eid++ << "\" source=\"" << xml_escape(e.a) << "\" target=\""
           << xml_escape(e.b) << "\">\n"
           << "      <data key=\"d_dist\">" << e.distance << "</data>\n"
           << "      <data key=\"d_weight\">" << 1.0 / e.distance << "</data>\n"
           << "    </edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
    return os.str();
}

} // namespace indnet
