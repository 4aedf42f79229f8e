#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include <p3dec/line_graph.hpp>
#include <p3dec/matching.hpp>
#include <p3dec/oracle.hpp>
#include <p3dec/rng.hpp>
#include <p3dec/ugraph.hpp>

using namespace p3dec;

namespace {

/// Maximum matching size by exhaustive search over edge subsets, <= 20 edges.
int brute_matching_size(const ugraph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
        bool ok = true;
        int size = 0;
        for (int e = 0; e < g.size() && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            auto [u, v] = g.edge_at(e);
            if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
                ok = false;
            covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
            ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

constexpr int brute_edge_limit = 12;

ugraph random_ugraph(int n, double p, std::uint64_t seed) {
    splitmix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_bool(p)) edges.emplace_back(i, j);
    return ugraph(n, std::move(edges));
}

bool is_valid_matching(const ugraph& g, const matching& m) {
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : m.edges()) {
        if (!g.adjacent(u, v)) return false;
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
            return false;
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("frozen maximum matchings") {
    CHECK(max_matching(ugraph(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 1);
    matching c4 = max_matching(ugraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(c4.size() == 2);
    CHECK(c4.is_perfect());
    matching ltt3 = max_matching(ugraph(3, {{0, 2}}));
    CHECK(ltt3.size() == 1);
    CHECK_FALSE(ltt3.is_perfect());
}

TEST_CASE("blossom matches the exhaustive maximum on random graphs") {
    int instances = 0;
    for (std::uint64_t seed = 0; instances < 250; ++seed) {
        int n = 3 + static_cast<int>(seed % 7);
        ugraph g = random_ugraph(n, 0.45, seed * 31 + 1);
        if (g.size() > brute_edge_limit) continue;
        ++instances;
        matching m = max_matching(g);
        CHECK(is_valid_matching(g, m));
        CHECK(m.size() == brute_matching_size(g));
    }
}

TEST_CASE("blossom handles odd cycles with pendants") {
    // C5 with a chord and a pendant exercises blossom contraction
    ugraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}, {4, 5}});
    CHECK(max_matching(g).size() == brute_matching_size(g));
    CHECK(max_matching(g).size() == 3);
}

TEST_CASE("gallai edmonds frozen structures") {
    gallai_edmonds_result k3 = gallai_edmonds(ugraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(k3.d_set == std::vector<int>{0, 1, 2});
    CHECK(k3.a_set.empty());
    CHECK(k3.deficiency == 1);

    // star: center 0, leaves 1..3
    gallai_edmonds_result star = gallai_edmonds(ugraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.d_set == std::vector<int>{1, 2, 3});
    CHECK(star.a_set == std::vector<int>{0});
    CHECK(star.deficiency == 2);

    gallai_edmonds_result c4 = gallai_edmonds(ugraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(c4.d_set.empty());
    CHECK(c4.a_set.empty());
    CHECK(c4.deficiency == 0);

    // path a-b-c: both ends exposable, middle is the neighborhood
    gallai_edmonds_result p3 = gallai_edmonds(ugraph(3, {{0, 1}, {1, 2}}));
    CHECK(p3.d_set == std::vector<int>{0, 2});
    CHECK(p3.a_set == std::vector<int>{1});
    CHECK(p3.deficiency == 1);
}

TEST_CASE("gallai edmonds deficiency identity on random graphs") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);
        ugraph g = random_ugraph(n, 0.4, seed * 17 + 3);
        gallai_edmonds_result ge = gallai_edmonds(g);
        CHECK(ge.deficiency == g.order() - 2 * max_matching(g).size());
        std::vector<char> removed = mask_of(g.order(), ge.a_set);
        CHECK(ge.deficiency ==
              odd_component_count(g, removed) - static_cast<int>(ge.a_set.size()));
        // D is closed under exposability: dropping any single vertex of D
        // keeps the matching size, dropping a C vertex reduces it
        for (int v : ge.d_set) {
            std::vector<std::pair<int, int>> sub;
            for (int e = 0; e < g.size(); ++e) {
                auto [x, y] = g.edge_at(e);
                if (x != v && y != v) sub.emplace_back(x, y);
            }
            CHECK(max_matching(ugraph(g.order(), sub)).size() == max_matching(g).size());
        }
    }
}

TEST_CASE("tutte witness frozen sets") {
    tutte_witness_result k3 = tutte_witness(ugraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(k3.s.empty());
    CHECK(k3.odd_components == 1);

    tutte_witness_result star = tutte_witness(ugraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.s == std::vector<int>{0});
    CHECK(star.odd_components == 3);

    tutte_witness_result p3 = tutte_witness(ugraph(3, {{0, 1}, {1, 2}}));
    CHECK(p3.s == std::vector<int>{1});
    CHECK(p3.odd_components == 2);

    CHECK_THROWS_AS(tutte_witness(ugraph(2, {{0, 1}})), has_perfect_matching_error);
}

TEST_CASE("tutte witness invariants on deficient random graphs") {
    int deficient = 0;
    for (std::uint64_t seed = 0; deficient < 150; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);
        ugraph g = random_ugraph(n, 0.35, seed * 13 + 7);
        matching m = max_matching(g);
        if (m.is_perfect()) continue;
        ++deficient;
        tutte_witness_result tw = tutte_witness(g);
        std::vector<char> removed = mask_of(g.order(), tw.s);
        auto comps = components_minus(g, removed);
        int odd = 0;
        for (const auto& c : comps) {
            CHECK(c.size() % 2 == 1);  // refined witness: every component odd
            ++odd;
        }
        CHECK(odd == tw.odd_components);
        CHECK(tw.odd_components > static_cast<int>(tw.s.size()));
        // Berge-Tutte: the witness attains the deficiency exactly
        CHECK(g.order() - 2 * m.size() ==
              tw.odd_components - static_cast<int>(tw.s.size()));
    }
}

TEST_CASE("bipartite matching frozen examples") {
    std::vector<char> left_k22{1, 1, 0, 0};
    CHECK(bipartite_max_matching(ugraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), left_k22)
              .size() == 2);

    std::vector<char> left_share{1, 1, 0};
    CHECK(bipartite_max_matching(ugraph(3, {{0, 2}, {1, 2}}), left_share).size() == 1);

    // line graph of the path 0 -> 2 -> 1: arcs chain at vertex 2
    digraph path(3, {{0, 2}, {2, 1}});
    ugraph lg = build_line_graph(path, p3_policy::allow_closed).to_ugraph();
    std::vector<char> left_arc{1, 0};
    matching m = bipartite_max_matching(lg, left_arc);
    CHECK(m.size() == 1);
    CHECK(m.is_perfect());

    // the edge (0, 1) has both ends on the left side
    CHECK_THROWS_AS(bipartite_max_matching(ugraph(3, {{0, 1}, {1, 2}}),
                                           std::vector<char>{1, 1, 0}),
                    not_bipartite_error);
}

TEST_CASE("bipartite matching agrees with blossom in cardinality") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int a = 1 + static_cast<int>(seed % 4), b = 1 + static_cast<int>((seed / 4) % 4);
        splitmix64 rng(seed * 7 + 5);
        std::vector<std::pair<int, int>> edges;
        std::vector<char> left(static_cast<std::size_t>(a + b), 0);
        for (int i = 0; i < a; ++i) left[static_cast<std::size_t>(i)] = 1;
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j)
                if (rng.next_bool(0.5)) edges.emplace_back(i, j);
        ugraph g(a + b, std::move(edges));
        CHECK(bipartite_max_matching(g, left).size() == max_matching(g).size());
    }
}

TEST_CASE("hall violator frozen examples") {
    std::vector<char> left2{1, 1, 0};
    hall_violator_result shared = hall_violator(ugraph(3, {{0, 2}, {1, 2}}), left2);
    CHECK(shared.s == std::vector<int>{0, 1});
    CHECK(shared.neighborhood_size == 1);

    std::vector<char> left3{1, 1, 1, 0, 0};
    hall_violator_result abc = hall_violator(ugraph(5, {{0, 3}, {1, 3}, {2, 4}}), left3);
    CHECK(abc.s == std::vector<int>{0, 1});
    CHECK(abc.neighborhood_size == 1);

    std::vector<char> left_k22{1, 1, 0, 0};
    CHECK_THROWS_AS(hall_violator(ugraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}), left_k22),
                    no_violator_error);
}

TEST_CASE("fractional perfect matching frozen examples") {
    fractional_pm_result c5 =
        fractional_pm(ugraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
    CHECK(c5.exists);

    fractional_pm_result star = fractional_pm(ugraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK_FALSE(star.exists);
    REQUIRE(star.witness.has_value());
    CHECK(*star.witness == std::vector<int>{0});

    digraph tt3(3, {{0, 1}, {0, 2}, {1, 2}});
    fractional_pm_result ltt3 =
        fractional_pm(build_line_graph(tt3, p3_policy::strict_path).to_ugraph());
    CHECK_FALSE(ltt3.exists);
    REQUIRE(ltt3.witness.has_value());
    CHECK(ltt3.witness->empty());
}

TEST_CASE("fractional existence agrees with the subset oracle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        ugraph g = random_ugraph(n, 0.4, seed * 41 + 11);
        fractional_pm_result fr = fractional_pm(g);
        auto viol = oracle::brute_fractional_violator(g);
        CHECK(fr.exists == !viol.has_value());
        if (!fr.exists) {
            REQUIRE(fr.witness.has_value());
            std::vector<char> removed = mask_of(g.order(), *fr.witness);
            CHECK(isolated_count_minus(g, removed) >
                  static_cast<int>(fr.witness->size()));
        }
    }
}

TEST_SUITE_END();
