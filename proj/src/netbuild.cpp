#include "indnet/netbuild.hpp"

#include <cmath>
#include <sstream>

namespace indnet {

NormalizedTable normalize_rows(const OutputTable& t) {
    NormalizedTable nt;
    nt.year = t.year;
    nt.industries = t.industries;
    nt.products = t.products;
    nt.shares.resize(t.values.size());
    for (std::size_t i = 0; i < t.n_industries(); ++i) {
        double total = t.row_total(i);
        if (!(total > 0))
            throw DomainError("zero-total row " + t.industries[i] +
                              " (should have been excluded)");
        for (std::size_t p = 0; p < t.n_products(); ++p)
            nt.shares[i * t.n_products() + p] = t.value(i, p) / total * 1e3;
    }
    return nt;
}

WeightMatrix similarity_weights(const NormalizedTable& nt) {
    const std::size_t n = nt.n_industries();
    const std::size_t np = nt.n_products();
    WeightMatrix w;
    w.ids = nt.industries;
    w.w.assign(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            double s = 0.0;
            const double* ra = nt.shares.data() + a * np;
            const double* rb = nt.shares.data() + b * np;
            for (std::size_t k = 0; k < np; ++k) s += ra[k] * rb[k];
            w.at(a, b) = s;
            w.at(b, a) = s;
        }
    }
    return w;
}

DistanceMatrix distance_matrix(const WeightMatrix& w) {
    const std::size_t n = w.n();
    DistanceMatrix d;
    d.ids = w.ids;
    d.d.assign(n * n, kUnreachable);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue; // self-distance never consumed
            double wv = w.at(a, b);
            if (wv > 0) d.at(a, b) = 1.0 / wv;
        }
    return d;
}

std::pair<BipartiteGraph, PairSet> bipartite_and_projection(const OutputTable& t) {
    BipartiteGraph g;
    g.industry_nodes = t.industries;
    g.product_nodes = t.products;
    for (std::size_t i = 0; i < t.n_industries(); ++i)
        for (std::size_t p = 0; p < t.n_products(); ++p)
            if (t.value(i, p) > 0) g.edges.emplace_back(i, p);

    PairSet proj;
    for (std::size_t p = 0; p < t.n_products(); ++p) {
        std::vector<std::size_t> producers;
        for (std::size_t i = 0; i < t.n_industries(); ++i)
            if (t.value(i, p) > 0) producers.push_back(i);
        for (std::size_t x = 0; x < producers.size(); ++x)
            for (std::size_t y = x + 1; y < producers.size(); ++y)
                proj.emplace(producers[x], producers[y]);
    }
    return {std::move(g), std::move(proj)};
}

std::string matrix_csv(const std::vector<std::string>& ids, const std::vector<double>& data) {
    const std::size_t n = ids.size();
    std::ostringstream os;
    os.precision(17);
    os << "id";
    for (const auto& id : ids) os << ',' << id;
    os << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        os << ids[i];
        for (std::size_t j = 0; j < n; ++j) {
            os << ',';
            double v = data[i * n + j];
            if (std::isinf(v))
                os << "inf";
            else
                os << v;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace indnet
