#include "indnet/mstcluster.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "indnet/errors.hpp"

namespace indnet {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t root(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = root(a);
        b = root(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void require_connected(const DistanceMatrix& d) {
    const std::size_t n = d.n();
    UnionFind uf(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (d.reachable(a, b)) uf.unite(a, b);

    std::map<std::size_t, std::vector<std::string>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[uf.root(i)].push_back(d.ids[i]);
    if (comps.size() <= 1) return;

    std::ostringstream os;
    os << "finite-distance graph is disconnected into " << comps.size() << " components:";
    for (const auto& [root, members] : comps) {
        os << " {";
        for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
        os << "}";
    }
    throw ConnectivityError(os.str());
}

TreeEdge make_edge(const DistanceMatrix& d, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return {d.ids[a], d.ids[b], d.at(a, b)};
}

} // namespace

std::pair<MergeSequence, SpanningTree> single_linkage(const DistanceMatrix& d) {
    const std::size_t n = d.n();
    if (n < 2) throw DomainError("clustering needs at least 2 industries");
    require_connected(d);

    std::vector<std::size_t> cluster(n);
    std::iota(cluster.begin(), cluster.end(), std::size_t{0});

    MergeSequence seq;
    SpanningTree tree;
    tree.ids = d.ids;
    tree.threshold = 0.0;

    for (std::size_t step = 1; step < n; ++step) {
        // Minimum inter-cluster pairwise distance; ties resolved by the
        // lexicographically smallest (min index, max index) pair.
        double best = kUnreachable;
        std::size_t ba = n, bb = n;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (cluster[a] == cluster[b]) continue;
                double dist = d.at(a, b);
                if (dist < best) {
                    best = dist;
                    ba = a;
                    bb = b;
                }
            }
        if (ba == n) throw ConnectivityError("no finite inter-cluster distance remains");

        MergeStep ms;
        ms.step = static_cast<int>(step);
        ms.distance = best;
        for (std::size_t i = 0; i < n; ++i) {
            if (cluster[i] == cluster[ba]) ms.cluster_a.push_back(d.ids[i]);
            if (cluster[i] == cluster[bb]) ms.cluster_b.push_back(d.ids[i]);
        }
        ms.realizing_pair = {d.ids[ba], d.ids[bb]};
        seq.steps.push_back(std::move(ms));

        tree.edges.push_back(make_edge(d, ba, bb));
        tree.threshold = std::max(tree.threshold, best);

        std::size_t from = cluster[bb], to = cluster[ba];
        for (std::size_t i = 0; i < n; ++i)
            if (cluster[i] == from) cluster[i] = to;
    }

    // L = max{d_q}; coincides with the last merge by monotonicity.
    if (tree.threshold != seq.steps.back().distance)
        throw ConsistencyError("merge distances not monotone: max differs from last step");
    return {std::move(seq), std::move(tree)};
}

SpanningTree mst_oracle(const DistanceMatrix& d) {
    const std::size_t n = d.n();
    if (n < 2) throw DomainError("MST needs at least 2 industries");
    require_connected(d);

    struct Cand {
        double dist;
        std::size_t a, b;
    };
    std::vector<Cand> cands;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (d.reachable(a, b)) cands.push_back({d.at(a, b), a, b});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.dist != y.dist) return x.dist < y.dist;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    UnionFind uf(n);
    SpanningTree tree;
    tree.ids = d.ids;
    tree.threshold = 0.0;
    for (const auto& c : cands) {
        if (!uf.unite(c.a, c.b)) continue;
        tree.edges.push_back(make_edge(d, c.a, c.b));
        tree.threshold = std::max(tree.threshold, c.dist);
        if (tree.edges.size() == n - 1) break;
    }
    return tree;
}

int replaced_links(const SpanningTree& a, const SpanningTree& b) {
    auto ids_a = a.ids, ids_b = b.ids;
    std::sort(ids_a.begin(), ids_a.end());
    std::sort(ids_b.begin(), ids_b.end());
    if (ids_a != ids_b) throw DomainError("trees span different industry sets");

    auto pairs = [](const SpanningTree& t) {
        std::set<std::pair<std::string, std::string>> s;
        for (const auto& e : t.edges) s.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
        return s;
    };
    auto pa = pairs(a);
    auto pb = pairs(b);
    int out = 0;
    for (const auto& p : pa)
        if (!pb.count(p)) ++out;
    return out;
}

} // namespace indnet
