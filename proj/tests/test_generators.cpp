#include <doctest.h>

#include <p3dec/digraph.hpp>
#include <p3dec/generators.hpp>
#include <p3dec/rng.hpp>

using namespace p3dec;

TEST_SUITE_BEGIN("generators");

TEST_CASE("splitmix64 reference stream") {
    // first outputs of the reference update for seed 0
    splitmix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("splitmix64 derived draws stay in range") {
    splitmix64 rng(123);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.next_below(7) < 7);
        double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("transitive tournament") {
    digraph d = transitive_tournament(3);
    CHECK(d.arcs() == std::vector<arc>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_tournament(d));
    for (int n : {1, 2, 4, 6, 9})
        CHECK(topological_order(transitive_tournament(n)).has_value());
}

TEST_CASE("random tournament is deterministic and a tournament") {
    digraph a = random_tournament(5, 1);
    digraph b = random_tournament(5, 1);
    CHECK(a == b);
    CHECK(is_tournament(a));
    CHECK_FALSE(random_tournament(5, 2) == a);
}

TEST_CASE("complete bipartite orientation") {
    digraph d = complete_bipartite_orientation(2, 2);
    CHECK(d.size() == 4);
    vertex_set x = vertex_set::of(4, {0, 1});
    CHECK(is_bipartite_with(d, x));
    for (const arc& a : d.arcs()) {
        CHECK(x.contains(a.tail));
        CHECK_FALSE(x.contains(a.head));
    }
    CHECK(cut_degrees(d, x) == degree_pair{4, 0});
}

TEST_CASE("random bipartite digraph respects the bipartition") {
    for (std::uint64_t seed : {0ull, 7ull, 99ull}) {
        digraph d = random_bipartite_digraph(3, 4, 0.6, seed);
        CHECK(is_bipartite_with(d, vertex_set::of(7, {0, 1, 2})));
        CHECK(d == random_bipartite_digraph(3, 4, 0.6, seed));
    }
}

TEST_CASE("random strict digraph flags") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        digraph d = random_strict_digraph(6, 0.5, true, seed);
        CHECK(d.is_asymmetric());
    }
    bool saw_digon = false;
    for (std::uint64_t seed = 0; seed < 20 && !saw_digon; ++seed)
        saw_digon = !random_strict_digraph(6, 0.7, false, seed).is_asymmetric();
    CHECK(saw_digon);
}

TEST_CASE("random eulerian satisfies the eulerian invariants") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        digraph d = random_eulerian(6, 12, seed);
        CHECK(d.size() == 12);
        for (int v = 0; v < d.order(); ++v) CHECK(d.in_degree(v) == d.out_degree(v));
        CHECK(weakly_connected(d));
        CHECK(d == random_eulerian(6, 12, seed));
    }
}

TEST_CASE("infeasible generator parameters") {
    CHECK_THROWS_AS(random_eulerian(4, 2, 0), infeasible_params_error);
    CHECK_THROWS_AS(random_eulerian(3, 100, 0), infeasible_params_error);
    // covering 10 vertices with 5 arcs is impossible in a union of cycles
    CHECK_THROWS_AS(random_eulerian(10, 5, 0), infeasible_params_error);
}

TEST_SUITE_END();
