#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "digraph.hpp"
#include "line_graph.hpp"
#include "ugraph.hpp"

namespace p3dec::oracle {

/// Exhaustive pairing search over arc ids, at most 16 arcs.  Always pairs the
/// lowest unused arc first and tries partners in ascending order, so the
/// returned decomposition is the first one in that ordering.
inline std::optional<p3_decomposition> brute_decompose(const digraph& d, p3_policy policy) {
    if (d.size() > 16)
        throw budget_exceeded_error("brute_decompose handles at most 16 arcs, got " +
                                    std::to_string(d.size()));
    if (d.size() % 2 == 1) return std::nullopt;

    auto chains = [&](int a, int b) {
        const arc& aa = d.arc_at(a);
        const arc& ab = d.arc_at(b);
        if (aa.head != ab.tail) return false;
        return policy == p3_policy::allow_closed || aa.tail != ab.head;
    };

    p3_decomposition acc;
    std::uint32_t used = 0;
    auto rec = [&](auto&& self) -> bool {
        int a = -1;
        for (int i = 0; i < d.size(); ++i)
            if (!(used >> i & 1)) {
                a = i;
                break;
            }
        if (a == -1) return true;
        for (int b = a + 1; b < d.size(); ++b) {
            if (used >> b & 1) continue;
            p3_triple t;
            if (chains(a, b))
                t = {d.arc_at(a).tail, d.arc_at(a).head, d.arc_at(b).head};
            else if (chains(b, a))
                t = {d.arc_at(b).tail, d.arc_at(b).head, d.arc_at(a).head};
            else
                continue;
            used |= (1u << a) | (1u << b);
            acc.push_back(t);
            if (self(self)) return true;
            acc.pop_back();
            used &= ~((1u << a) | (1u << b));
        }
        return false;
    };
    if (rec(rec)) return acc;
    return std::nullopt;
}

struct partition_scan_result {
    int min_slack = 0;
    partition3 argmin;
};

/// Evaluates the cut inequality over all 3^n ordered partitions (X, Y, Z).
/// Masks are scanned ascending and only strict improvements are kept, so the
/// argmin is the first partition attaining the minimum slack.
inline partition_scan_result brute_partition3(const digraph& d) {
    if (d.order() > 12)
        throw budget_exceeded_error("brute_partition3 handles at most 12 vertices, got " +
                                    std::to_string(d.order()));
    std::uint64_t total = 1;
    for (int i = 0; i < d.order(); ++i) total *= 3;
    partition_scan_result best{std::numeric_limits<int>::max(), partition3{}};
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        partition3 p = partition_from_mask(d.order(), mask);
        int slack = partition_slack(d, p);
        if (slack < best.min_slack) best = {slack, p};
    }
    return best;
}

struct set_violation {
    std::vector<int> s;  // sorted vertex set
    int value = 0;       // deficiency, strictly positive
};

namespace detail {

template <typename Count>
std::optional<set_violation> max_deficiency_set(const ugraph& g, Count&& count) {
    if (g.order() > 16)
        throw budget_exceeded_error("violator scan handles at most 16 vertices, got " +
                                    std::to_string(g.order()));
    std::optional<set_violation> best;
    for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
        std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
        int size = 0;
        for (int v = 0; v < g.order(); ++v)
            if (mask >> v & 1) {
                removed[static_cast<std::size_t>(v)] = 1;
                ++size;
            }
        int deficiency = count(removed) - size;
        if (deficiency > 0 && (!best || deficiency > best->value)) {
            std::vector<int> s;
            for (int v = 0; v < g.order(); ++v)
                if (mask >> v & 1) s.push_back(v);
            best = set_violation{std::move(s), deficiency};
        }
    }
    return best;
}

}  // namespace detail

/// Maximum-deficiency Tutte violator c_o(G - S) > |S|, lowest mask on ties;
/// none when G satisfies Tutte's condition.
inline std::optional<set_violation> brute_tutte_violator(const ugraph& g) {
    return detail::max_deficiency_set(
        g, [&](const std::vector<char>& removed) { return odd_component_count(g, removed); });
}

/// Same scan with isolated vertices in place of odd components, the condition
/// for fractional perfect matchings.
inline std::optional<set_violation> brute_fractional_violator(const ugraph& g) {
    return detail::max_deficiency_set(
        g, [&](const std::vector<char>& removed) { return isolated_count_minus(g, removed); });
}

struct hall_violation {
    vertex_set x1, y1;
    int lhs = 0, rhs = 0;
};

struct hall_scan_result {
    int d_plus_x = 0, d_minus_x = 0;
    std::optional<hall_violation> violation;
    bool balanced() const { return d_plus_x == d_minus_x; }
    bool ok() const { return balanced() && !violation; }
};

/// Degree balance plus the subset inequality a(X1,Y1) + a(Y1,X1) <=
/// d+(Y1) + d-(X1) over every X1 inside X and Y1 inside the other side.
/// The scan runs only when the cut degrees balance and keeps the violation
/// with the largest excess, earliest subset pair on ties.
inline hall_scan_result brute_hall(const digraph& d, const vertex_set& x) {
    if (d.order() > 12)
        throw budget_exceeded_error("brute_hall handles at most 12 vertices, got " +
                                    std::to_string(d.order()));
    require_universe(d, x);
    if (!is_bipartite_with(d, x))
        throw not_bipartite_error("an arc does not cross the given bipartition");

    hall_scan_result res;
    degree_pair dp = cut_degrees(d, x);
    res.d_plus_x = dp.d_plus;
    res.d_minus_x = dp.d_minus;
    if (!res.balanced()) return res;

    std::vector<int> xs = x.to_vector();
    std::vector<int> ys = x.complement().to_vector();
    int excess_best = 0;
    for (std::uint32_t xm = 0; xm < (1u << xs.size()); ++xm) {
        vertex_set x1(d.order());
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xm >> i & 1) x1.insert(xs[i]);
        for (std::uint32_t ym = 0; ym < (1u << ys.size()); ++ym) {
            vertex_set y1(d.order());
            for (std::size_t i = 0; i < ys.size(); ++i)
                if (ym >> i & 1) y1.insert(ys[i]);
            int lhs = arc_count_between(d, x1, y1) + arc_count_between(d, y1, x1);
            int rhs = cut_degrees(d, y1).d_plus + cut_degrees(d, x1).d_minus;
            if (lhs - rhs > excess_best) {
                excess_best = lhs - rhs;
                res.violation = hall_violation{x1, y1, lhs, rhs};
            }
        }
    }
    return res;
}

enum class pattern { k4_minus_e, k33_minus_e };

namespace detail {

inline int induced_edges(const ugraph& g, const std::vector<int>& vs) {
    int count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) ++count;
    return count;
}

/// K4 minus an edge is the unique 4-vertex graph with 5 edges.
inline bool is_k4_minus_e(const ugraph& g, const std::vector<int>& vs) {
    return induced_edges(g, vs) == 5;
}

/// K3,3 minus an edge: 8 edges and some 3+3 split with no edge inside either
/// part (8 crossing edges out of 9 follow automatically).
inline bool is_k33_minus_e(const ugraph& g, const std::vector<int>& vs) {
    if (induced_edges(g, vs) != 8) return false;
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            std::array<int, 3> a{vs[0], vs[i], vs[j]};
            std::vector<int> b;
            for (std::size_t k = 1; k < 6; ++k)
                if (k != i && k != j) b.push_back(vs[k]);
            bool independent = !g.adjacent(a[0], a[1]) && !g.adjacent(a[0], a[2]) &&
                               !g.adjacent(a[1], a[2]) && !g.adjacent(b[0], b[1]) &&
                               !g.adjacent(b[0], b[2]) && !g.adjacent(b[1], b[2]);
            if (independent) return true;
        }
    return false;
}

template <typename Check>
std::optional<std::vector<int>> scan_subsets(const ugraph& g, int k, Check&& check) {
    std::vector<int> vs(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int depth, int from) -> bool {
        if (depth == k) return check(vs);
        for (int v = from; v < g.order(); ++v) {
            vs[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return vs;
    return std::nullopt;
}

}  // namespace detail

/// First vertex subset (lexicographic) inducing the forbidden pattern, or
/// none.  Line graphs of digraphs never contain either pattern induced.
inline std::optional<std::vector<int>> induced_pattern_scan(const ugraph& g, pattern p) {
    if (p == pattern::k4_minus_e) {
        if (g.order() > 100)
            throw budget_exceeded_error("k4_minus_e scan handles at most 100 vertices");
        return detail::scan_subsets(g, 4,
                                    [&](const std::vector<int>& vs) { return detail::is_k4_minus_e(g, vs); });
    }
    if (g.order() > 40)
        throw budget_exceeded_error("k33_minus_e scan handles at most 40 vertices");
    if (g.order() < 6) return std::nullopt;
    return detail::scan_subsets(g, 6,
                                [&](const std::vector<int>& vs) { return detail::is_k33_minus_e(g, vs); });
}

/// All 2^C(n,2) labeled tournaments, mask ascending: bit p covers the p-th
/// pair (i, j) in lexicographic order, 0 keeps (i, j), 1 flips to (j, i).
/// Mask 0 is the transitive tournament.
inline std::vector<digraph> enumerate_tournaments(int n) {
    if (n > 6)
        throw budget_exceeded_error("enumerate_tournaments handles at most 6 vertices, got " +
                                    std::to_string(n));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<digraph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<arc> arcs;
        arcs.reserve(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            if (mask >> p & 1)
                arcs.push_back({j, i});
            else
                arcs.push_back({i, j});
        }
        out.emplace_back(n, std::move(arcs));
    }
    return out;
}

/// All 4^(a*b) bipartite digraphs on parts [0, a) and [a, a+b), mask
/// ascending in base 4: digit p covers the p-th cross pair (x, y), with
/// 0 none, 1 the arc x -> y, 2 the arc y -> x, 3 both.
inline std::vector<digraph> enumerate_bipartite_digraphs(int a, int b) {
    if (a * b > 6)
        throw budget_exceeded_error("enumerate_bipartite_digraphs handles at most 6 pairs, got " +
                                    std::to_string(a * b));
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y) pairs.emplace_back(x, y);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
    std::vector<digraph> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<arc> arcs;
        std::uint64_t rest = mask;
        for (auto [x, y] : pairs) {
            switch (rest % 4) {
                case 1: arcs.push_back({x, y}); break;
                case 2: arcs.push_back({y, x}); break;
                case 3:
                    arcs.push_back({x, y});
                    arcs.push_back({y, x});
                    break;
                default: break;
            }
            rest /= 4;
        }
        out.emplace_back(a + b, std::move(arcs));
    }
    return out;
}

}  // namespace p3dec::oracle
