#include <doctest.h>

#include <random>

#include "indnet/topometrics.hpp"
#include "oracles.hpp"

using namespace indnet;

namespace {

DistanceMatrix three_node_example() {
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

TEST_CASE("redundancy on the 3-node example") {
    CHECK(redundancy(three_node_example(), 4.0e-6) == 0); // m=2, n-1=2
}

TEST_CASE("redundancy when all pairs qualify") {
    DistanceMatrix d = oracles::make_distances(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (a != b) d.at(a, b) = 1.0;
    CHECK(redundancy(d, 1.0) == 3); // m=6, S=3
}

TEST_CASE("redundancy rejects threshold below clustering") {
    CHECK_THROWS_AS(redundancy(three_node_example(), 1.0e-6), ConsistencyError);
}

TEST_CASE("residuality on the 3-node example") {
    double r = residuality(three_node_example(), 4.0e-6);
    CHECK(r == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("residuality zero cases") {
    SUBCASE("every non-tree pair unreachable") {
        DistanceMatrix d = oracles::make_distances(3);
        d.at(0, 1) = d.at(1, 0) = 1.0;
        d.at(1, 2) = d.at(2, 1) = 2.0;
        CHECK(residuality(d, 2.0) == 0.0);
    }
    SUBCASE("all pairs within threshold") {
        DistanceMatrix d = oracles::make_distances(4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                if (a != b) d.at(a, b) = 1.0;
        CHECK(residuality(d, 1.0) == 0.0);
    }
}

TEST_CASE("residuality is scale invariant") {
    std::mt19937_64 rng(31);
    DistanceMatrix d = oracles::random_distances(rng, 8);
    auto tree = mst_oracle(d);
    double r1 = residuality(d, tree.threshold);
    DistanceMatrix scaled = d;
    for (auto& v : scaled.d)
        if (std::isfinite(v)) v *= 0.25;
    double r2 = residuality(scaled, tree.threshold * 0.25);
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("boolean_graph boundary rule is <=") {
    auto a = boolean_graph(three_node_example(), 4.0e-6);
    CHECK(a.at(0, 1));
    CHECK(a.at(1, 2)); // exactly at the threshold
    CHECK_FALSE(a.at(0, 2));
    CHECK_FALSE(a.at(0, 0));
    CHECK(a.at(1, 0)); // symmetric
}

TEST_CASE("boolean_graph saturation and empty cases") {
    auto d = three_node_example();
    auto all = boolean_graph(d, 1.0);
    CHECK(all.at(0, 2));
    auto none = boolean_graph(d, 1.0e-9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK_FALSE(none.at(i, j));
}

TEST_CASE("S equals unit-arc count minus n-1, and monotone in L") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 30; ++rep) {
        DistanceMatrix d = oracles::random_distances(rng, 9);
        auto tree = mst_oracle(d);
        double L = tree.threshold;
        auto a = boolean_graph(d, L);
        int arcs = 0;
        for (std::size_t i = 0; i < a.n(); ++i)
            for (std::size_t j = i + 1; j < a.n(); ++j)
                if (a.at(i, j)) ++arcs;
        CHECK(redundancy(d, L) == arcs - static_cast<int>(d.n()) + 1);

        double L2 = L * 1.5;
        CHECK(redundancy(d, L2) >= redundancy(d, L));
        CHECK(residuality(d, L2) <= residuality(d, L));
    }
}

TEST_CASE("build_report single year and identical years") {
    auto d = three_node_example();
    auto [seq, tree] = single_linkage(d);

    TopoReport one = build_report({{2000, d, tree}});
    REQUIRE(one.rows.size() == 1);
    CHECK_FALSE(one.rows[0].replaced.has_value());
    CHECK(one.rows[0].redundancy == 0);
    CHECK(one.rows[0].residuality == doctest::Approx(1.0 / 15.0));

    TopoReport two = build_report({{2000, d, tree}, {2001, d, tree}});
    REQUIRE(two.rows.size() == 2);
    CHECK(two.rows[1].replaced == 0);
    CHECK(two.rows[0].threshold == two.rows[1].threshold);
    CHECK(two.rows[0].redundancy == two.rows[1].redundancy);
}

TEST_CASE("build_report rejects mismatched node sets") {
    auto d = three_node_example();
    auto [seq, tree] = single_linkage(d);
    std::mt19937_64 rng(33);
    auto d2 = oracles::random_distances(rng, 3); // different ids
    auto t2 = mst_oracle(d2);
    CHECK_THROWS_AS(build_report({{2000, d, tree}, {2001, d2, t2}}), DomainError);
}

TEST_CASE("report serializations") {
    auto d = three_node_example();
    auto [seq, tree] = single_linkage(d);
    TopoReport r = build_report({{2000, d, tree}, {2001, d, tree}});

    std::string json = report_json(r);
    CHECK(json.find("\"year\": 2000") != std::string::npos);
    CHECK(json.find("\"RL\": null") != std::string::npos);
    CHECK(json.find("\"RL\": 0") != std::string::npos);

    std::string csv = report_csv(r);
    CHECK(csv.rfind("year,L,RL,S,R", 0) == 0);

    std::string pgm = boolean_pgm(r.adjacency[0]);
    CHECK(pgm.rfind("P1\n3 3", 0) == 0);

    std::string bcsv = boolean_csv(r.adjacency[0]);
    CHECK(bcsv.find("X,0,1,0") != std::string::npos);

    std::string svg = report_svg(r);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("residuality R") != std::string::npos);
}
