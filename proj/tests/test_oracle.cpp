#include <doctest.h>

#include <algorithm>
#include <vector>

#include <p3dec/decomposition.hpp>
#include <p3dec/generators.hpp>
#include <p3dec/matching.hpp>
#include <p3dec/oracle.hpp>

using namespace p3dec;

namespace {

digraph tt3() { return digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
digraph c3() { return digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
digraph c4() { return digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute_decompose frozen outcomes") {
    auto four = oracle::brute_decompose(c4(), p3_policy::strict_path);
    REQUIRE(four.has_value());
    CHECK(*four == p3_decomposition{{0, 1, 2}, {2, 3, 0}});

    CHECK_FALSE(oracle::brute_decompose(tt3(), p3_policy::strict_path).has_value());
    CHECK_FALSE(oracle::brute_decompose(c3(), p3_policy::strict_path).has_value());

    digraph digon(2, {{0, 1}, {1, 0}});
    auto closed = oracle::brute_decompose(digon, p3_policy::allow_closed);
    REQUIRE(closed.has_value());
    CHECK(*closed == p3_decomposition{{0, 1, 0}});
    CHECK_FALSE(oracle::brute_decompose(digon, p3_policy::strict_path).has_value());

    CHECK_THROWS_AS(oracle::brute_decompose(transitive_tournament(7), p3_policy::strict_path),
                    budget_exceeded_error);
}

TEST_CASE("brute_partition3 frozen outcomes") {
    oracle::partition_scan_result tt = oracle::brute_partition3(tt3());
    CHECK(tt.min_slack == -1);
    CHECK(tt.argmin.x.to_vector() == std::vector<int>{0});
    CHECK(tt.argmin.y.to_vector() == std::vector<int>{2});
    CHECK(tt.argmin.z.to_vector() == std::vector<int>{1});

    oracle::partition_scan_result cyc = oracle::brute_partition3(c3());
    CHECK(cyc.min_slack == 0);
    // the empty partition X = Y = {} already attains slack 0 at mask 0
    CHECK(cyc.argmin.x.empty());
    CHECK(cyc.argmin.y.empty());
    CHECK(cyc.argmin.z.to_vector() == std::vector<int>{0, 1, 2});

    CHECK(oracle::brute_partition3(c4()).min_slack >= 0);

    CHECK_THROWS_AS(oracle::brute_partition3(digraph(13, {})), budget_exceeded_error);
}

TEST_CASE("subset violators on fixed graphs") {
    auto k3 = oracle::brute_tutte_violator(ugraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    REQUIRE(k3.has_value());
    CHECK(k3->s.empty());
    CHECK(k3->value == 1);

    auto star = oracle::brute_fractional_violator(ugraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE(star.has_value());
    CHECK(star->s == std::vector<int>{0});
    CHECK(star->value == 2);

    CHECK_FALSE(oracle::brute_tutte_violator(ugraph(2, {{0, 1}})).has_value());
    CHECK_FALSE(oracle::brute_fractional_violator(
                    ugraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}))
                    .has_value());

    CHECK_THROWS_AS(oracle::brute_tutte_violator(ugraph(17, {})), budget_exceeded_error);
}

TEST_CASE("violator existence matches the matching engine") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        splitmix64 rng(seed * 23 + 9);
        int n = 2 + static_cast<int>(seed % 8);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_bool(0.4)) edges.emplace_back(i, j);
        ugraph g(n, edges);
        CHECK(oracle::brute_tutte_violator(g).has_value() != max_matching(g).is_perfect());
        CHECK(oracle::brute_fractional_violator(g).has_value() != fractional_pm(g).exists);
    }
}

TEST_CASE("brute_hall reports imbalance before scanning subsets") {
    oracle::hall_scan_result fork =
        oracle::brute_hall(digraph(3, {{0, 2}, {1, 2}}), vertex_set::of(3, {0, 1}));
    CHECK(fork.d_plus_x == 2);
    CHECK(fork.d_minus_x == 0);
    CHECK_FALSE(fork.balanced());
    CHECK_FALSE(fork.violation.has_value());
    CHECK_FALSE(fork.ok());
}

TEST_CASE("brute_hall finds the worst subset violation") {
    digraph d(5, {{0, 2}, {1, 2}, {2, 4}, {3, 4}});
    oracle::hall_scan_result res = oracle::brute_hall(d, vertex_set::of(5, {0, 1, 4}));
    CHECK(res.balanced());
    REQUIRE(res.violation.has_value());
    CHECK(res.violation->x1.to_vector() == std::vector<int>{0, 1});
    CHECK(res.violation->y1.to_vector() == std::vector<int>{2});
    CHECK(res.violation->lhs == 2);
    CHECK(res.violation->rhs == 1);
    CHECK_FALSE(res.ok());

    oracle::hall_scan_result digon =
        oracle::brute_hall(digraph(2, {{0, 1}, {1, 0}}), vertex_set::of(2, {0}));
    CHECK(digon.ok());

    CHECK_THROWS_AS(oracle::brute_hall(digraph(3, {{0, 1}, {1, 2}}), vertex_set::of(3, {0, 1})),
                    not_bipartite_error);
    CHECK_THROWS_AS(oracle::brute_hall(digraph(13, {}), vertex_set::of(13, {0})),
                    budget_exceeded_error);
}

TEST_CASE("hall scan agrees with the bipartite checker") {
    vertex_set x = vertex_set::of(4, {0, 1});
    for (const digraph& d : oracle::enumerate_bipartite_digraphs(2, 2)) {
        check_result engine = check_bipartite(d, x);
        oracle::hall_scan_result scan = oracle::brute_hall(d, x);
        CHECK(engine.decomposable == scan.ok());
    }
}

TEST_CASE("pattern scan recognizes the forbidden graphs") {
    ugraph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto hit = oracle::induced_pattern_scan(k4e, oracle::pattern::k4_minus_e);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<int>{0, 1, 2, 3});

    ugraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(oracle::induced_pattern_scan(k4, oracle::pattern::k4_minus_e).has_value());

    // K3,3 on parts {0,1,2} and {3,4,5} minus the edge {2,5}
    ugraph k33e(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
    auto hit33 = oracle::induced_pattern_scan(k33e, oracle::pattern::k33_minus_e);
    REQUIRE(hit33.has_value());
    CHECK(*hit33 == std::vector<int>{0, 1, 2, 3, 4, 5});

    ugraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(oracle::induced_pattern_scan(k33, oracle::pattern::k33_minus_e).has_value());

    // embedded occurrence with spare vertices around it
    ugraph padded(6, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {0, 4}});
    auto inner = oracle::induced_pattern_scan(padded, oracle::pattern::k4_minus_e);
    REQUIRE(inner.has_value());
    CHECK(*inner == std::vector<int>{1, 2, 3, 5});

    CHECK_FALSE(oracle::induced_pattern_scan(ugraph(3, {{0, 1}}), oracle::pattern::k4_minus_e)
                    .has_value());
    CHECK_FALSE(oracle::induced_pattern_scan(ugraph(5, {}), oracle::pattern::k33_minus_e)
                    .has_value());

    CHECK_THROWS_AS(oracle::induced_pattern_scan(ugraph(101, {}), oracle::pattern::k4_minus_e),
                    budget_exceeded_error);
    CHECK_THROWS_AS(oracle::induced_pattern_scan(ugraph(41, {}), oracle::pattern::k33_minus_e),
                    budget_exceeded_error);
}

TEST_CASE("line graphs avoid the forbidden patterns") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        digraph d = random_strict_digraph(6, 0.5, true, seed + 77);
        ugraph lg = build_line_graph(d, p3_policy::strict_path).to_ugraph();
        CHECK_FALSE(oracle::induced_pattern_scan(lg, oracle::pattern::k4_minus_e).has_value());
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        digraph d = random_bipartite_digraph(3, 3, 0.5, seed + 177);
        if (!d.is_asymmetric()) continue;
        ugraph lg = build_line_graph(d, p3_policy::allow_closed).to_ugraph();
        CHECK_FALSE(oracle::induced_pattern_scan(lg, oracle::pattern::k33_minus_e).has_value());
    }
}

TEST_CASE("enumerators cover the advertised ranges") {
    std::vector<digraph> t3 = oracle::enumerate_tournaments(3);
    CHECK(t3.size() == 8);
    for (const digraph& t : t3) CHECK(is_tournament(t));
    // mask 0 keeps every pair in lexicographic order
    CHECK(t3[0].arcs() == transitive_tournament(3).arcs());
    // mask 1 flips exactly the first pair
    CHECK(t3[1].arcs() == std::vector<arc>{{1, 0}, {0, 2}, {1, 2}});

    CHECK(oracle::enumerate_tournaments(4).size() == 64);
    CHECK(oracle::enumerate_tournaments(5).size() == 1024);
    CHECK_THROWS_AS(oracle::enumerate_tournaments(7), budget_exceeded_error);

    std::vector<digraph> b11 = oracle::enumerate_bipartite_digraphs(1, 1);
    REQUIRE(b11.size() == 4);
    CHECK(b11[0].size() == 0);
    CHECK(b11[1].arcs() == std::vector<arc>{{0, 1}});
    CHECK(b11[2].arcs() == std::vector<arc>{{1, 0}});
    CHECK(b11[3].arcs() == std::vector<arc>{{0, 1}, {1, 0}});

    CHECK(oracle::enumerate_bipartite_digraphs(2, 3).size() == 4096);
    CHECK_THROWS_AS(oracle::enumerate_bipartite_digraphs(7, 1), budget_exceeded_error);
}

TEST_SUITE_END();
