#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include <p3dec/euler.hpp>
#include <p3dec/generators.hpp>
#include <p3dec/line_graph.hpp>

using namespace p3dec;

namespace {

digraph c3() { return digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// two directed triangles sharing vertex 0
digraph figure_eight() {
    return digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

bool chains_cyclically(const digraph& d, const std::vector<int>& tour) {
    for (std::size_t i = 0; i < tour.size(); ++i)
        if (d.arc_at(tour[i]).head != d.arc_at(tour[(i + 1) % tour.size()]).tail)
            return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("euler");

TEST_CASE("is_eulerian") {
    CHECK(is_eulerian(c3()));
    CHECK(is_eulerian(digraph(2, {{0, 1}, {1, 0}})));
    CHECK(is_eulerian(figure_eight()));
    // source breaks degree balance
    CHECK_FALSE(is_eulerian(digraph(3, {{0, 1}, {0, 2}, {1, 2}})));
    // two disjoint triangles are balanced but disconnected
    CHECK_FALSE(is_eulerian(digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    // isolated vertices do not count against connectivity
    CHECK(is_eulerian(digraph(4, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK_FALSE(is_eulerian(digraph(3, {})));
}

TEST_CASE("frozen euler tours") {
    CHECK(euler_tour(c3()) == std::vector<int>{0, 1, 2});
    CHECK(euler_tour(digraph(2, {{0, 1}, {1, 0}})) == std::vector<int>{0, 1});
    // lowest out-arc first walks the whole figure eight without splicing
    CHECK(euler_tour(figure_eight()) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(euler_tour(digraph(3, {{0, 1}, {0, 2}, {1, 2}})), not_eulerian_error);
}

TEST_CASE("splicing picks up the walk stranded at vertex 1") {
    // first walk 0 -> 1 -> 0 closes early; the 1 -> 2 -> 1 loop is spliced in
    digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    std::vector<int> tour = euler_tour(d);
    CHECK(tour == std::vector<int>{0, 2, 3, 1});
    CHECK(chains_cyclically(d, tour));
}

TEST_CASE("tours are permutations of the arc ids") {
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        int m = n + static_cast<int>(seed % 9);
        digraph d(0, {});
        try {
            d = random_eulerian(n, m, seed);
        } catch (const infeasible_params_error&) {
            continue;  // dense corners can exhaust the assembly retries
        }
        ++accepted;
        std::vector<int> tour = euler_tour(d);
        CHECK(chains_cyclically(d, tour));
        std::vector<int> sorted = tour;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect(static_cast<std::size_t>(d.size()));
        std::iota(expect.begin(), expect.end(), 0);
        CHECK(sorted == expect);
    }
    CHECK(accepted >= 30);
}

TEST_CASE("verify_hamilton_cycle") {
    line_graph lg = build_line_graph(c3(), p3_policy::strict_path);
    CHECK(verify_hamilton_cycle(lg, {0, 1, 2}));
    CHECK(verify_hamilton_cycle(lg, {1, 2, 0}));
    CHECK_FALSE(verify_hamilton_cycle(lg, {0, 1}));        // wrong length
    CHECK_FALSE(verify_hamilton_cycle(lg, {0, 1, 1}));     // repeat
    CHECK_FALSE(verify_hamilton_cycle(lg, {0, 1, 3}));     // out of range
    // non-adjacent consecutive pair: L(TT3) has a single edge
    digraph tt3(3, {{0, 1}, {0, 2}, {1, 2}});
    line_graph sparse = build_line_graph(tt3, p3_policy::strict_path);
    CHECK_FALSE(verify_hamilton_cycle(sparse, {0, 1, 2}));
    // fewer than 3 vertices can never host a cycle
    digraph digon(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(verify_hamilton_cycle(build_line_graph(digon, p3_policy::allow_closed), {0, 1}));
}

TEST_CASE("line_hamilton_cycle frozen examples") {
    CHECK(line_hamilton_cycle(c3(), p3_policy::strict_path) == std::vector<int>{0, 1, 2});
    std::vector<int> eight = line_hamilton_cycle(figure_eight(), p3_policy::strict_path);
    CHECK(verify_hamilton_cycle(build_line_graph(figure_eight(), p3_policy::strict_path), eight));
    CHECK(eight.size() == 6);

    digraph digon(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(line_hamilton_cycle(digon, p3_policy::allow_closed), too_small_error);
    CHECK_THROWS_AS(line_hamilton_cycle(digraph(3, {{0, 1}, {0, 2}, {1, 2}}),
                                        p3_policy::strict_path),
                    not_eulerian_error);
}

TEST_CASE("a tour through a 2-cycle is hamiltonian only when closed") {
    // every tour of this digraph traverses (1,0),(0,1) or (0,1),(1,0)
    // consecutively, which strict adjacency rejects
    digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK_THROWS_AS(line_hamilton_cycle(d, p3_policy::strict_path), policy_mismatch_error);
    std::vector<int> cycle = line_hamilton_cycle(d, p3_policy::allow_closed);
    CHECK(verify_hamilton_cycle(build_line_graph(d, p3_policy::allow_closed), cycle));
}

TEST_CASE("random eulerian digraphs always yield a closed-policy hamilton cycle") {
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        int m = std::min(n + static_cast<int>((seed * 7) % 12), n * (n - 1));
        digraph d(0, {});
        try {
            d = random_eulerian(n, m, seed + 1000);
        } catch (const infeasible_params_error&) {
            continue;  // dense corners can exhaust the assembly retries
        }
        ++accepted;
        REQUIRE(is_eulerian(d));
        std::vector<int> cycle = line_hamilton_cycle(d, p3_policy::allow_closed);
        CHECK(verify_hamilton_cycle(build_line_graph(d, p3_policy::allow_closed), cycle));
        // an eulerian digraph has a connected line graph; the reachability
        // check applies only to asymmetric inputs
        if (d.is_asymmetric()) {
            connectivity_report rep = line_graph_connected(d, p3_policy::strict_path);
            CHECK(rep.connected);
            CHECK(rep.methods_agree);
        }
    }
    CHECK(accepted >= 45);
}

TEST_SUITE_END();
