#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "rng.hpp"

namespace p3dec {

/// Arcs (i, j) for every i < j; vertex 0 beats everyone.
inline digraph transitive_tournament(int n) {
    if (n < 0) throw infeasible_params_error("order must be non-negative");
    std::vector<arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
    return digraph(n, std::move(arcs));
}

/// Each unordered pair {i < j} oriented by one generator bit:
/// 0 keeps (i, j), 1 flips to (j, i).  Arc order follows pair order.
inline digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw infeasible_params_error("order must be non-negative");
    splitmix64 rng(seed);
    std::vector<arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arcs.push_back(rng.next() & 1u ? arc{j, i} : arc{i, j});
    return digraph(n, std::move(arcs));
}

/// X = [0, a), Y = [a, a+b), every arc X -> Y, lexicographic order.
inline digraph complete_bipartite_orientation(int a, int b) {
    if (a < 0 || b < 0) throw infeasible_params_error("part sizes must be non-negative");
    std::vector<arc> arcs;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y) arcs.push_back({x, y});
    return digraph(a + b, std::move(arcs));
}

/// X = [0, a), Y = [a, a+b); for each cross pair, x->y and y->x are included
/// independently with probability p (digons permitted).
inline digraph random_bipartite_digraph(int a, int b, double p, std::uint64_t seed) {
    if (a < 0 || b < 0) throw infeasible_params_error("part sizes must be non-negative");
    if (p < 0.0 || p > 1.0) throw infeasible_params_error("p must be in [0, 1]");
    splitmix64 rng(seed);
    std::vector<arc> arcs;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y) {
            if (rng.next_bool(p)) arcs.push_back({x, y});
            if (rng.next_bool(p)) arcs.push_back({y, x});
        }
    return digraph(a + b, std::move(arcs));
}

/// For each unordered pair {i < j}: in asymmetric mode, the pair gets an arc
/// with probability p, direction chosen by a further bit; otherwise both
/// ordered pairs are sampled independently with probability p.
inline digraph random_strict_digraph(int n, double p, bool asymmetric, std::uint64_t seed) {
    if (n < 0) throw infeasible_params_error("order must be non-negative");
    if (p < 0.0 || p > 1.0) throw infeasible_params_error("p must be in [0, 1]");
    splitmix64 rng(seed);
    std::vector<arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (asymmetric) {
                if (rng.next_bool(p))
                    arcs.push_back(rng.next() & 1u ? arc{j, i} : arc{i, j});
            } else {
                if (rng.next_bool(p)) arcs.push_back({i, j});
                if (rng.next_bool(p)) arcs.push_back({j, i});
            }
        }
    return digraph(n, std::move(arcs));
}

namespace detail {

/// One random simple directed cycle of the given length whose first vertex is
/// drawn from `anchor` (so consecutive cycles stay weakly connected).
/// Fails (returns empty) when a cycle arc collides with an existing arc.
inline std::vector<arc> draw_cycle(splitmix64& rng, int n, int length,
                                   const std::vector<int>& anchor,
                                   const std::vector<std::vector<char>>& present) {
    std::vector<int> verts;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int first = anchor[rng.next_below(anchor.size())];
    verts.push_back(first);
    used[static_cast<std::size_t>(first)] = 1;
    while (static_cast<int>(verts.size()) < length) {
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = 1;
        verts.push_back(v);
    }
    std::vector<arc> cycle;
    for (int i = 0; i < length; ++i) {
        int u = verts[static_cast<std::size_t>(i)];
        int w = verts[static_cast<std::size_t>((i + 1) % length)];
        if (present[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) return {};
        cycle.push_back({u, w});
    }
    return cycle;
}

}  // namespace detail

/// Weakly connected digraph with d+(v) = d-(v) everywhere and exactly m arcs,
/// built as a union of arc-disjoint directed cycles that each share a vertex
/// with the part already built.  Cycle lengths are drawn so none leaves a
/// remainder of 1.  Deterministic in (n, m, seed).
inline digraph random_eulerian(int n, int m, std::uint64_t seed) {
    if (m < 3) throw infeasible_params_error("eulerian generator needs m >= 3");
    if (n < 3 || m > n * (n - 1))
        throw infeasible_params_error("no strict digraph of order " + std::to_string(n) +
                                      " with " + std::to_string(m) + " arcs");
    // covering all n vertices by cycles forces degree >= 2 everywhere, so m >= n
    if (m < n)
        throw infeasible_params_error("weak connectivity needs m >= n, got m = " +
                                      std::to_string(m));
    splitmix64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<arc> arcs;
        std::vector<std::vector<char>> present(
            static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        std::vector<int> touched;
        std::vector<char> is_touched(static_cast<std::size_t>(n), 0);
        int remaining = m;
        bool dead_end = false;
        while (remaining > 0 && !dead_end) {
            int max_len = std::min(n, remaining);
            std::vector<int> lengths;
            for (int len = 2; len <= max_len; ++len)
                if (remaining - len != 1) lengths.push_back(len);
            if (lengths.empty()) {
                dead_end = true;
                break;
            }
            int length = lengths[rng.next_below(lengths.size())];
            std::vector<int> anchor = touched;
            if (anchor.empty())
                for (int v = 0; v < n; ++v) anchor.push_back(v);
            std::vector<arc> cycle;
            bool placed = false;
            for (int tries = 0; tries < 200; ++tries) {
                cycle = detail::draw_cycle(rng, n, length, anchor, present);
                if (!cycle.empty()) {
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                dead_end = true;
                break;
            }
            for (const arc& a : cycle) {
                present[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)] = 1;
                arcs.push_back(a);
                for (int v : {a.tail, a.head})
                    if (!is_touched[static_cast<std::size_t>(v)]) {
                        is_touched[static_cast<std::size_t>(v)] = 1;
                        touched.push_back(v);
                    }
            }
            remaining -= length;
        }
        if (!dead_end && remaining == 0 && static_cast<int>(touched.size()) == n)
            return digraph(n, std::move(arcs));
    }
    throw infeasible_params_error("could not assemble an eulerian digraph with n=" +
                                  std::to_string(n) + ", m=" + std::to_string(m));
}

}  // namespace p3dec
