#include <doctest.h>

#include <random>

#include "indnet/mstcluster.hpp"
#include "oracles.hpp"

using namespace indnet;
using oracles::edge_set;

namespace {

DistanceMatrix three_node_example() {
    // d(X,Y)=2e-6, d(Y,Z)=4e-6, d(X,Z)=2e-5
    DistanceMatrix d = oracles::make_distances(3);
    d.ids = {"X", "Y", "Z"};
    auto set = [&](std::size_t a, std::size_t b, double v) {
        d.at(a, b) = v;
        d.at(b, a) = v;
    };
    set(0, 1, 2.0e-6);
    set(1, 2, 4.0e-6);
    set(0, 2, 2.0e-5);
    return d;
}

} // namespace

TEST_CASE("single_linkage on the 3-node example") {
    auto [seq, tree] = single_linkage(three_node_example());
    CHECK(seq.steps.size() == 2);
    CHECK(tree.edges.size() == 2);
    CHECK(edge_set(tree) == oracles::EdgeSet{{0, 1}, {1, 2}});
    CHECK(tree.threshold == doctest::Approx(4.0e-6).epsilon(1e-12));
    CHECK(seq.steps[0].distance == 2.0e-6);
    CHECK(seq.steps[0].realizing_pair == std::pair<std::string, std::string>{"X", "Y"});
}

TEST_CASE("mst_oracle agrees on the 3-node example") {
    SpanningTree t = mst_oracle(three_node_example());
    CHECK(edge_set(t) == oracles::EdgeSet{{0, 1}, {1, 2}});
    CHECK(t.threshold == doctest::Approx(4.0e-6));
}

TEST_CASE("merge sequence records growing clusters") {
    auto [seq, tree] = single_linkage(three_node_example());
    CHECK(seq.steps[1].cluster_a.size() + seq.steps[1].cluster_b.size() == 3);
    CHECK(seq.steps[0].step == 1);
    CHECK(seq.steps[1].step == 2);
}

TEST_CASE("equal distances: tie-break fixes the tree shape") {
    const std::size_t n = 5;
    DistanceMatrix d = oracles::make_distances(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b) d.at(a, b) = 0.5;
    auto [seq, tree] = single_linkage(d);
    CHECK(tree.threshold == 0.5);
    // lexicographic tie-break: star on node 0
    CHECK(edge_set(tree) == oracles::EdgeSet{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(edge_set(mst_oracle(d)) == edge_set(tree));
}

TEST_CASE("chain-structured matrix yields the chain") {
    const std::size_t n = 6;
    DistanceMatrix d = oracles::make_distances(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d.at(i, i + 1) = 1.0 + static_cast<double>(i);
        d.at(i + 1, i) = d.at(i, i + 1);
    }
    oracles::EdgeSet chain;
    for (std::size_t i = 0; i + 1 < n; ++i) chain.emplace(i, i + 1);
    CHECK(edge_set(mst_oracle(d)) == chain);
    auto [seq, tree] = single_linkage(d);
    CHECK(edge_set(tree) == chain);
    CHECK(tree.threshold == 5.0);
}

TEST_CASE("disconnected graph raises ConnectivityError naming components") {
    DistanceMatrix d = oracles::make_distances(4);
    d.at(0, 1) = d.at(1, 0) = 1.0;
    d.at(2, 3) = d.at(3, 2) = 1.0;
    CHECK_THROWS_WITH_AS(single_linkage(d),
                         doctest::Contains("disconnected"), ConnectivityError);
    CHECK_THROWS_AS(mst_oracle(d), ConnectivityError);
}

TEST_CASE("single_linkage equals oracle and brute force on random matrices") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t n = 4 + rng() % 4; // 4..7: brute force tractable
        DistanceMatrix d = oracles::random_distances(rng, n);
        auto [seq, tree] = single_linkage(d);
        SpanningTree k = mst_oracle(d);
        CHECK(edge_set(tree) == edge_set(k));
        CHECK(edge_set(tree) == oracles::brute_force_mst(d));
        CHECK(tree.threshold == k.threshold);
    }
}

TEST_CASE("merge distances are non-decreasing") {
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 20; ++rep) {
        DistanceMatrix d = oracles::random_distances(rng, 10);
        auto [seq, tree] = single_linkage(d);
        for (std::size_t i = 1; i < seq.steps.size(); ++i)
            CHECK(seq.steps[i].distance >= seq.steps[i - 1].distance);
    }
}

TEST_CASE("scaling all distances preserves the tree and rescales the threshold") {
    std::mt19937_64 rng(23);
    DistanceMatrix d = oracles::random_distances(rng, 8);
    auto [seq1, t1] = single_linkage(d);
    DistanceMatrix scaled = d;
    for (auto& v : scaled.d)
        if (std::isfinite(v)) v *= 3.5;
    auto [seq2, t2] = single_linkage(scaled);
    CHECK(edge_set(t1) == edge_set(t2));
    CHECK(t2.threshold == doctest::Approx(3.5 * t1.threshold).epsilon(1e-12));
}

TEST_CASE("replaced_links") {
    std::mt19937_64 rng(24);
    DistanceMatrix d = oracles::random_distances(rng, 6);
    auto [seq, tree] = single_linkage(d);
    CHECK(replaced_links(tree, tree) == 0);

    SUBCASE("one-swap case") {
        SpanningTree a, b;
        a.ids = b.ids = {"X", "Y", "Z"};
        a.edges = {{"X", "Y", 1.0}, {"Y", "Z", 2.0}};
        b.edges = {{"X", "Y", 1.0}, {"X", "Z", 3.0}};
        CHECK(replaced_links(a, b) == 1);
        CHECK(replaced_links(b, a) == 1);
    }
    SUBCASE("mismatched node sets rejected") {
        SpanningTree a, b;
        a.ids = {"X", "Y"};
        b.ids = {"X", "Q"};
        a.edges = {{"X", "Y", 1.0}};
        b.edges = {{"X", "Q", 1.0}};
        CHECK_THROWS_AS(replaced_links(a, b), DomainError);
    }
    SUBCASE("bounded by n-1 and symmetric on random pairs") {
        for (int rep = 0; rep < 20; ++rep) {
            DistanceMatrix d1 = oracles::random_distances(rng, 7);
            DistanceMatrix d2 = oracles::random_distances(rng, 7);
            auto t1 = mst_oracle(d1);
            auto t2 = mst_oracle(d2);
            int rl = replaced_links(t1, t2);
            CHECK(rl >= 0);
            CHECK(rl <= 6);
            CHECK(rl == replaced_links(t2, t1));
        }
    }
}

TEST_CASE("replaced links ignore edge distances") {
    SpanningTree a, b;
    a.ids = b.ids = {"X", "Y", "Z"};
    a.edges = {{"X", "Y", 1.0}, {"Y", "Z", 2.0}};
    b.edges = {{"X", "Y", 9.0}, {"Y", "Z", 7.0}};
    CHECK(replaced_links(a, b) == 0);
}
