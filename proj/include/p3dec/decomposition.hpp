#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digraph.hpp"
#include "line_graph.hpp"
#include "matching.hpp"
#include "ugraph.hpp"

namespace p3dec {

/// Directed path u -> v -> w claiming the arcs (u,v) and (v,w).
struct p3_triple {
    int u = 0, v = 0, w = 0;
    friend bool operator==(const p3_triple&, const p3_triple&) = default;
};

using p3_decomposition = std::vector<p3_triple>;

// ---- refutation certificates ----------------------------------------------

struct odd_arc_count_cert {
    int arc_count = 0;
};

struct tournament_partition_cert {
    partition3 parts;
    int slack = 0;  // negative: the cut inequality fails at (X, Y, Z)
};

struct bipartite_imbalance_cert {
    vertex_set side_x;
    int d_plus_x = 0;
    int d_minus_x = 0;
};

struct bipartite_hall_cert {
    vertex_set side_x;
    vertex_set x1, y1;
    int lhs = 0;  // a(X1,Y1) + a(Y1,X1)
    int rhs = 0;  // d+(Y1) + d-(X1)
};

struct fractional_partition_cert {
    partition3 parts;
    int slack = 0;
};

struct generic_tutte_cert {
    std::vector<int> arc_set;  // S as line-graph vertex ids, sorted
    int odd_components = 0;    // c_o(L(D) - S), strictly greater than |S|
};

struct certificate {
    p3_policy policy = p3_policy::strict_path;  // line graph the claim refers to
    std::variant<odd_arc_count_cert, tournament_partition_cert, bipartite_imbalance_cert,
                 bipartite_hall_cert, fractional_partition_cert, generic_tutte_cert>
        value;
};

inline const char* kind_name(const certificate& c) {
    switch (c.value.index()) {
        case 0: return "odd_arc_count";
        case 1: return "tournament_partition";
        case 2: return "bipartite_imbalance";
        case 3: return "bipartite_hall";
        case 4: return "fractional_partition";
        default: return "generic_tutte";
    }
}

// ---- decomposition construction and verification ---------------------------

inline bool verify_decomposition(const digraph& d, const p3_decomposition& dec,
                                 p3_policy policy) {
    std::vector<char> used(static_cast<std::size_t>(d.size()), 0);
    int claimed = 0;
    for (const p3_triple& t : dec) {
        if (policy == p3_policy::strict_path && t.u == t.w) return false;
        auto first = d.find_arc(t.u, t.v);
        auto second = d.find_arc(t.v, t.w);
        if (!first || !second || *first == *second) return false;
        if (used[static_cast<std::size_t>(*first)] || used[static_cast<std::size_t>(*second)])
            return false;
        used[static_cast<std::size_t>(*first)] = used[static_cast<std::size_t>(*second)] = 1;
        claimed += 2;
    }
    return claimed == d.size();
}

namespace detail {

/// Orients a chained arc pair into a triple.  When both orders chain (a
/// 2-cycle under AllowClosed) the lower arc id leads.
inline p3_triple triple_from_pair(const digraph& d, int a, int b) {
    const arc& aa = d.arc_at(a);
    const arc& ab = d.arc_at(b);
    bool a_leads = aa.head == ab.tail;
    bool b_leads = ab.head == aa.tail;
    if (a_leads && b_leads && b < a) a_leads = false;
    if (a_leads) return p3_triple{aa.tail, aa.head, ab.head};
    if (b_leads) return p3_triple{ab.tail, ab.head, aa.head};
    throw precondition_error("arcs " + std::to_string(a) + " and " + std::to_string(b) +
                             " do not chain");
}

inline p3_decomposition decomposition_from_matching(const digraph& d, const matching& m) {
    p3_decomposition dec;
    for (int a = 0; a < d.size(); ++a)
        if (m.mate_of(a) > a) dec.push_back(triple_from_pair(d, a, m.mate_of(a)));
    return dec;
}

}  // namespace detail

using decompose_result = std::variant<p3_decomposition, certificate>;

/// Decides decomposability through a maximum matching of L(D).  A perfect
/// matching is returned as the triple list; otherwise the refutation is the
/// odd arc count or a Tutte set of L(D).
inline decompose_result decompose(const digraph& d, p3_policy policy) {
    if (d.size() % 2 == 1)
        return certificate{policy, odd_arc_count_cert{d.size()}};
    ugraph lg = build_line_graph(d, policy).to_ugraph();
    matching m = max_matching(lg);
    if (m.is_perfect()) {
        p3_decomposition dec = detail::decomposition_from_matching(d, m);
        assert(verify_decomposition(d, dec, policy));
        return dec;
    }
    tutte_witness_result tw = tutte_witness(lg);
    return certificate{policy, generic_tutte_cert{tw.s, tw.odd_components}};
}

// ---- certificate verification ----------------------------------------------

/// Recomputes every claimed violation from D alone; stored numbers must match
/// the recomputation exactly.
inline bool verify_certificate(const digraph& d, const certificate& c) {
    struct checker {
        const digraph& d;
        p3_policy policy;

        bool operator()(const odd_arc_count_cert& cert) const {
            return cert.arc_count == d.size() && d.size() % 2 == 1;
        }

        bool operator()(const tournament_partition_cert& cert) const {
            if (!is_tournament(d)) return false;
            if (!is_valid_partition(d, cert.parts)) return false;
            int slack = partition_slack(d, cert.parts);
            return slack == cert.slack && slack < 0;
        }

        bool operator()(const bipartite_imbalance_cert& cert) const {
            if (cert.side_x.universe() != d.order()) return false;
            if (!is_bipartite_with(d, cert.side_x)) return false;
            degree_pair dp = cut_degrees(d, cert.side_x);
            return dp.d_plus == cert.d_plus_x && dp.d_minus == cert.d_minus_x &&
                   dp.d_plus != dp.d_minus;
        }

        bool operator()(const bipartite_hall_cert& cert) const {
            if (cert.side_x.universe() != d.order()) return false;
            if (!is_bipartite_with(d, cert.side_x)) return false;
            // X1 inside X, Y1 inside the other side
            if ((cert.x1.bits() & ~cert.side_x.bits()) != 0) return false;
            if ((cert.y1.bits() & cert.side_x.bits()) != 0) return false;
            int lhs = arc_count_between(d, cert.x1, cert.y1) +
                      arc_count_between(d, cert.y1, cert.x1);
            int rhs = cut_degrees(d, cert.y1).d_plus + cut_degrees(d, cert.x1).d_minus;
            return lhs == cert.lhs && rhs == cert.rhs && lhs > rhs;
        }

        bool operator()(const fractional_partition_cert& cert) const {
            if (!is_valid_partition(d, cert.parts)) return false;
            int slack = partition_slack(d, cert.parts);
            return slack == cert.slack && slack < 0;
        }

        bool operator()(const generic_tutte_cert& cert) const {
            std::vector<char> removed(static_cast<std::size_t>(d.size()), 0);
            for (int a : cert.arc_set) {
                if (a < 0 || a >= d.size() || removed[static_cast<std::size_t>(a)]) return false;
                removed[static_cast<std::size_t>(a)] = 1;
            }
            ugraph lg = build_line_graph(d, policy).to_ugraph();
            int odd = odd_component_count(lg, removed);
            return odd == cert.odd_components &&
                   odd > static_cast<int>(cert.arc_set.size());
        }
    };
    return std::visit(checker{d, c.policy}, c.value);
}

// ---- tournament checker -----------------------------------------------------

struct check_result {
    bool decomposable = false;
    std::optional<p3_decomposition> decomposition;
    std::optional<certificate> cert;
};

namespace detail {

inline std::optional<certificate> tournament_source_sink_cert(const digraph& t) {
    for (const arc& a : t.arcs())
        if (t.in_degree(a.tail) == 0 && t.out_degree(a.head) == 0) {
            partition3 p = partition3::of(t.order(), {a.tail}, {a.head});
            return certificate{p3_policy::strict_path,
                               tournament_partition_cert{p, partition_slack(t, p)}};
        }
    return std::nullopt;
}

/// Near-balanced dominant bipartition: sort by outdegree, try the top half as
/// X and accept when every arc between the halves runs X -> Y.
inline std::optional<certificate> tournament_dominant_cert(const digraph& t) {
    int n = t.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
    for (int k = (n + 1) / 2; k >= n / 2; --k) {
        if (k <= 0 || k >= n) continue;
        vertex_set x(n);
        for (int i = 0; i < k; ++i) x.insert(order[static_cast<std::size_t>(i)]);
        bool complete = true;
        for (int xv : x.to_vector()) {
            for (int yv = 0; yv < n && complete; ++yv)
                if (!x.contains(yv) && !t.find_arc(xv, yv)) complete = false;
            if (!complete) break;
        }
        if (!complete) continue;
        partition3 p{x, x.complement(), vertex_set(n)};
        return certificate{p3_policy::strict_path,
                           tournament_partition_cert{p, partition_slack(t, p)}};
    }
    return std::nullopt;
}

/// Proof-guided extraction: isolate the arcs that a Tutte set of L(T) leaves
/// exposed and read the partition off their tails and heads.
inline std::optional<certificate> tournament_witness_cert(const digraph& t) {
    ugraph lg = build_line_graph(t, p3_policy::strict_path).to_ugraph();
    tutte_witness_result tw = tutte_witness(lg);
    std::vector<char> removed = mask_of(lg.order(), tw.s);
    std::vector<int> isolated = isolated_vertices_minus(lg, removed);
    vertex_set x(t.order()), y(t.order());
    for (int a : isolated) {
        x.insert(t.arc_at(a).tail);
        y.insert(t.arc_at(a).head);
    }
    if (x.empty() || y.empty() || x.intersects(y)) return std::nullopt;
    vertex_set z = vertex_set::from_bits(
        t.order(), vertex_set::full(t.order()).bits() & ~(x.bits() | y.bits()));
    partition3 p{x, y, z};
    int slack = partition_slack(t, p);
    if (slack >= 0) return std::nullopt;
    return certificate{p3_policy::strict_path, tournament_partition_cert{p, slack}};
}

inline std::optional<certificate> partition_scan_cert(const digraph& d, bool as_tournament) {
    if (d.order() > 12) return std::nullopt;
    std::uint64_t total = 1;
    for (int i = 0; i < d.order(); ++i) total *= 3;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        partition3 p = partition_from_mask(d.order(), mask);
        int slack = partition_slack(d, p);
        if (slack < 0) {
            if (as_tournament)
                return certificate{p3_policy::strict_path, tournament_partition_cert{p, slack}};
            return certificate{p3_policy::strict_path, fractional_partition_cert{p, slack}};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Even-size tournaments: decomposability decided by matching, refuted by a
/// negative-slack partition.  Certificate search runs quick characterization
/// checks, then the proof-guided witness mapping, then an exhaustive 3^n scan
/// for n <= 12; every candidate is verified before being returned.
inline check_result check_tournament(const digraph& t, bool find_certificate = true) {
    if (!is_tournament(t)) throw not_tournament_error();
    if (t.size() % 2 == 1) throw odd_size_error(t.size());

    decompose_result res = decompose(t, p3_policy::strict_path);
    if (auto* dec = std::get_if<p3_decomposition>(&res))
        return check_result{true, *dec, std::nullopt};
    if (!find_certificate) return check_result{false, std::nullopt, std::nullopt};

    for (auto& candidate :
         {detail::tournament_source_sink_cert(t), detail::tournament_dominant_cert(t),
          detail::tournament_witness_cert(t), detail::partition_scan_cert(t, true)})
        if (candidate && verify_certificate(t, *candidate))
            return check_result{false, std::nullopt, *candidate};
    throw certificate_search_exhausted_error("no partition certificate found for order " +
                                             std::to_string(t.order()));
}

// ---- bipartite checker ------------------------------------------------------

/// Bipartite digraphs under AllowClosed: L(D) is bipartite with the arcs
/// X -> Y on one side, so Hall's condition decides.  Refutations are the side
/// imbalance d+(X) != d-(X) or a mapped Hall violator.
inline check_result check_bipartite(const digraph& d, const vertex_set& x,
                                    bool find_certificate = true) {
    require_universe(d, x);
    if (!is_bipartite_with(d, x))
        throw not_bipartite_error("an arc does not cross the given bipartition");

    ugraph lg = build_line_graph(d, p3_policy::allow_closed).to_ugraph();
    std::vector<char> left(static_cast<std::size_t>(d.size()), 0);
    for (int a = 0; a < d.size(); ++a)
        if (x.contains(d.arc_at(a).tail)) left[static_cast<std::size_t>(a)] = 1;

    matching m = bipartite_max_matching(lg, left);
    if (m.is_perfect()) {
        p3_decomposition dec = detail::decomposition_from_matching(d, m);
        assert(verify_decomposition(d, dec, p3_policy::allow_closed));
        return check_result{true, dec, std::nullopt};
    }
    if (!find_certificate) return check_result{false, std::nullopt, std::nullopt};

    degree_pair dp = cut_degrees(d, x);
    if (dp.d_plus != dp.d_minus) {
        certificate c{p3_policy::allow_closed,
                      bipartite_imbalance_cert{x, dp.d_plus, dp.d_minus}};
        assert(verify_certificate(d, c));
        return check_result{false, std::nullopt, c};
    }

    hall_violator_result hv = hall_violator(lg, left);
    vertex_set x1(d.order()), y1(d.order());
    for (int a : hv.s) {
        x1.insert(d.arc_at(a).tail);
        y1.insert(d.arc_at(a).head);
    }
    int lhs = arc_count_between(d, x1, y1) + arc_count_between(d, y1, x1);
    int rhs = cut_degrees(d, y1).d_plus + cut_degrees(d, x1).d_minus;
    certificate c{p3_policy::allow_closed, bipartite_hall_cert{x, x1, y1, lhs, rhs}};
    if (!verify_certificate(d, c))
        throw certificate_search_exhausted_error("mapped Hall violator failed verification");
    return check_result{false, std::nullopt, c};
}

// ---- fractional checker -----------------------------------------------------

struct fractional_check_result {
    bool exists = false;
    std::optional<certificate> cert;
};

/// Fractional relaxation: L(D) has a fractional perfect matching iff no
/// partition has negative slack.  A witness S maps to such a partition by
/// taking the arcs isolated in L(D) - S; the mapping can fail only in the
/// StrictPath 2-cycle corner, where the partition characterization itself
/// does not apply and no certificate is emitted.
inline fractional_check_result check_fractional(const digraph& d, p3_policy policy,
                                                bool find_certificate = true) {
    ugraph lg = build_line_graph(d, policy).to_ugraph();
    fractional_pm_result fr = fractional_pm(lg, find_certificate);
    if (fr.exists) return fractional_check_result{true, std::nullopt};
    if (!find_certificate) return fractional_check_result{false, std::nullopt};

    std::vector<char> removed = mask_of(lg.order(), *fr.witness);
    std::vector<int> isolated = isolated_vertices_minus(lg, removed);
    vertex_set x(d.order()), y(d.order());
    for (int a : isolated) {
        x.insert(d.arc_at(a).tail);
        y.insert(d.arc_at(a).head);
    }
    if (!x.intersects(y) && !x.empty() && !y.empty()) {
        vertex_set z = vertex_set::from_bits(
            d.order(), vertex_set::full(d.order()).bits() & ~(x.bits() | y.bits()));
        partition3 p{x, y, z};
        int slack = partition_slack(d, p);
        certificate c{policy, fractional_partition_cert{p, slack}};
        if (slack < 0 && verify_certificate(d, c))
            return fractional_check_result{false, c};
    }
    if (auto fallback = detail::partition_scan_cert(d, false);
        fallback && verify_certificate(d, *fallback))
        return fractional_check_result{false, *fallback};
    return fractional_check_result{false, std::nullopt};
}

// ---- undirected pairing -----------------------------------------------------

struct kotzig_result {
    std::vector<std::array<int, 3>> paths;        // x - v - y vertex triples
    std::vector<std::vector<int>> odd_components;  // components that cannot pair
    bool complete() const { return odd_components.empty(); }
};

/// Pairs the edges of each even-size component into paths of length 2 by
/// processing a rooted spanning tree in post-order: leftover edges at a
/// vertex pair among themselves, an odd one out pairs with the tree edge to
/// the parent.  Odd-size components are reported unpaired.
inline kotzig_result kotzig_undirected(const ugraph& g) {
    kotzig_result res;
    std::vector<char> edge_used(static_cast<std::size_t>(g.size()), 0);
    for (const auto& comp : components(g)) {
        int edge_count = 0;
        for (int v : comp) edge_count += g.degree(v);
        edge_count /= 2;
        if (edge_count % 2 == 1) {
            res.odd_components.push_back(comp);
            continue;
        }
        if (edge_count == 0) continue;

        int root = comp.front();
        std::vector<int> parent_edge(static_cast<std::size_t>(g.order()), -1);
        std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
        std::vector<int> post_order;
        // iterative depth-first search recording finish order
        std::vector<std::pair<int, int>> stack{{root, 0}};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& inc = g.incident(v);
            if (idx >= static_cast<int>(inc.size())) {
                post_order.push_back(v);
                stack.pop_back();
                continue;
            }
            int e = inc[static_cast<std::size_t>(idx++)];
            auto [a, b] = g.edge_at(e);
            int to = a == v ? b : a;
            if (!visited[static_cast<std::size_t>(to)]) {
                visited[static_cast<std::size_t>(to)] = 1;
                parent_edge[static_cast<std::size_t>(to)] = e;
                stack.emplace_back(to, 0);
            }
        }

        auto other_end = [&](int e, int v) {
            auto [a, b] = g.edge_at(e);
            return a == v ? b : a;
        };
        for (int v : post_order) {
            std::vector<int> pending;
            for (int e : g.incident(v))
                if (!edge_used[static_cast<std::size_t>(e)] &&
                    e != parent_edge[static_cast<std::size_t>(v)])
                    pending.push_back(e);
            for (std::size_t i = 0; i + 1 < pending.size(); i += 2) {
                edge_used[static_cast<std::size_t>(pending[i])] = 1;
                edge_used[static_cast<std::size_t>(pending[i + 1])] = 1;
                res.paths.push_back({other_end(pending[i], v), v, other_end(pending[i + 1], v)});
            }
            if (pending.size() % 2 == 1) {
                int leftover = pending.back();
                int pe = parent_edge[static_cast<std::size_t>(v)];
                // component size is even, so only a non-root vertex can be odd here
                assert(pe != -1);
                edge_used[static_cast<std::size_t>(leftover)] = 1;
                edge_used[static_cast<std::size_t>(pe)] = 1;
                res.paths.push_back({other_end(leftover, v), v, other_end(pe, v)});
            }
        }
    }
    return res;
}

}  // namespace p3dec
