#include "indnet/topometrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "indnet/errors.hpp"

namespace indnet {

namespace {

// Counts unordered finite pairs with d <= L.
int within_threshold(const DistanceMatrix& d, double threshold) {
    const std::size_t n = d.n();
    int m = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d.reachable(i, j) && d.at(i, j) <= threshold) ++m;
    return m;
}

} // namespace

int redundancy(const DistanceMatrix& d, double threshold) {
    const int m = within_threshold(d, threshold);
    const int tree_edges = static_cast<int>(d.n()) - 1;
    if (m < tree_edges)
        throw ConsistencyError("only " + std::to_string(m) + " pairs within threshold, fewer than n-1 = " +
                               std::to_string(tree_edges));
    return m - tree_edges;
}

double residuality(const DistanceMatrix& d, double threshold) {
    const std::size_t n = d.n();
    double above = 0.0, below = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!d.reachable(i, j)) continue; // weight 0, contributes nothing
            double dist = d.at(i, j);
            if (dist <= threshold)
                below += 1.0 / dist;
            else
                above += 1.0 / dist;
        }
    if (below <= 0) throw DomainError("no pairs at or below the threshold");
    return above / below;
}

BooleanAdjacency boolean_graph(const DistanceMatrix& d, double threshold) {
    if (!(threshold > 0)) throw DomainError("threshold must be positive");
    const std::size_t n = d.n();
    BooleanAdjacency a;
    a.ids = d.ids;
    a.threshold_used = threshold;
    a.unit.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d.reachable(i, j) && d.at(i, j) <= threshold)
                a.unit[i * n + j] = 1;
    return a;
}

TopoReport build_report(const std::vector<YearNetwork>& series) {
    if (series.empty()) throw DomainError("report needs at least one year");
    for (std::size_t i = 1; i < series.size(); ++i) {
        auto a = series[0].distances.ids, b = series[i].distances.ids;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw DomainError("industry sets differ between years " +
                              std::to_string(series[0].year) + " and " +
                              std::to_string(series[i].year));
    }

    TopoReport r;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& yn = series[i];
        YearMetrics ym;
        ym.year = yn.year;
        ym.threshold = yn.tree.threshold;
        ym.redundancy = redundancy(yn.distances, yn.tree.threshold);
        ym.residuality = residuality(yn.distances, yn.tree.threshold);
        if (i > 0) ym.replaced = replaced_links(series[i - 1].tree, yn.tree);
        r.rows.push_back(ym);
        r.adjacency.push_back(boolean_graph(yn.distances, yn.tree.threshold));
    }
    return r;
}

std::string report_json(const TopoReport& r) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json o;
        o["year"] = row.year;
        o["L"] = row.threshold;
        if (row.replaced)
            o["RL"] = *row.replaced;
        else
            o["RL"] = nullptr;
        o["S"] = row.redundancy;
        o["R"] = row.residuality;
        out.push_back(std::move(o));
    }
    return out.dump(2) + "\n";
}

std::string report_csv(const TopoReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "year,L,RL,S,R\n";
    for (const auto& row : r.rows) {
        os << row.year << ',' << row.threshold << ',';
        if (row.replaced) os << *row.replaced;
        os << ',' << row.redundancy << ',' << row.residuality << '\n';
    }
    return os.str();
}

std::string boolean_pgm(const BooleanAdjacency& a) {
    const std::size_t n = a.n();
    std::ostringstream os;
    os << "P1\n" << n << ' ' << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << (a.at(i, j) ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

std::string boolean_csv(const BooleanAdjacency& a) {
    const std::size_t n = a.n();
    std::ostringstream os;
    os << "id";
    for (const auto& id : a.ids) os << ',' << id;
    os << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        os << a.ids[i];
        for (std::size_t j = 0; j < n; ++j) os << ',' << (a.at(i, j) ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

namespace {

// One panel: a polyline of (year, value) scaled into a fixed viewport.
void svg_panel(std::ostringstream& os, const std::vector<int>& years,
               const std::vector<double>& vals, const std::string& label, double x0, double y0) {
    const double w = 360, h = 200, pad = 36;
    double lo = vals[0], hi = vals[0];
    for (double v : vals) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) hi = lo + 1;
    double yr_lo = years.front(), yr_hi = years.back();
    if (yr_hi == yr_lo) yr_hi = yr_lo + 1;

    os << "<g transform=\"translate(" << x0 << ',' << y0 << ")\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"none\" stroke=\"#999\"/>\n";
    os << "<text x=\"8\" y=\"16\" font-size=\"13\">" << label << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double px = pad + (years[i] - yr_lo) / (yr_hi - yr_lo) * (w - 2 * pad);
        double py = h - pad - (vals[i] - lo) / (hi - lo) * (h - 2 * pad);
        os << px << ',' << py << ' ';
    }
    os << "\"/>\n";
    os << "<text x=\"" << pad << "\" y=\"" << h - 8 << "\" font-size=\"10\">" << years.front()
       << "</text>\n";
    os << "<text x=\"" << w - pad - 24 << "\" y=\"" << h - 8 << "\" font-size=\"10\">"
       << years.back() << "</text>\n";
    os << "<text x=\"4\" y=\"" << h - pad << "\" font-size=\"10\">" << lo << "</text>\n";
    os << "<text x=\"4\" y=\"" << pad << "\" font-size=\"10\">" << hi << "</text>\n";
    os << "</g>\n";
}

} // namespace

std::string report_svg(const TopoReport& r) {
    std::vector<int> years;
    std::vector<double> L, S, R;
    std::vector<int> rl_years;
    std::vector<double> RL;
    for (const auto& row : r.rows) {
        years.push_back(row.year);
        L.push_back(row.threshold);
        S.push_back(row.redundancy);
        R.push_back(row.residuality);
        if (row.replaced) {
            rl_years.push_back(row.year);
            RL.push_back(*row.replaced);
        }
    }

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"440\">\n";
    svg_panel(os, years, L, "threshold distance L", 10, 10);
    if (!RL.empty()) svg_panel(os, rl_years, RL, "replaced links RL", 390, 10);
    svg_panel(os, years, S, "redundancy S", 10, 225);
    svg_panel(os, years, R, "residuality R", 390, 225);
    os << "</svg>\n";
    return os.str();
}

} // namespace indnet
