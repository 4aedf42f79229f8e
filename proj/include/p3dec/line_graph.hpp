#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "ugraph.hpp"

namespace p3dec {

/// Whether the two arcs of a 2-cycle count as a path of length 2.
/// The walk u -> v -> u is closed, so StrictPath rejects the pair while
/// AllowClosed chains it.  The policies coincide on asymmetric digraphs.
enum class p3_policy { strict_path, allow_closed };

inline const char* to_string(p3_policy p) {
    return p == p3_policy::strict_path ? "strict" : "closed";
}

/// Undirected graph on the arc ids of a source digraph; arcs are adjacent
/// iff one follows the other head-to-tail (subject to the policy).
struct line_graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // normalized (lo, hi), sorted
    p3_policy policy = p3_policy::strict_path;

    ugraph to_ugraph() const { return ugraph(vertex_count, edges); }
};

inline line_graph build_line_graph(const digraph& d, p3_policy policy) {
    line_graph lg;
    lg.vertex_count = d.size();
    lg.policy = policy;
    for (int v = 0; v < d.order(); ++v)
        for (int a : d.in_arcs(v))
            for (int b : d.out_arcs(v)) {
                // a ends at v, b starts at v; the walk is closed iff they form a 2-cycle
                if (policy == p3_policy::strict_path &&
                    d.arc_at(a).tail == d.arc_at(b).head)
                    continue;
                lg.edges.emplace_back(std::min(a, b), std::max(a, b));
            }
    std::sort(lg.edges.begin(), lg.edges.end());
    lg.edges.erase(std::unique(lg.edges.begin(), lg.edges.end()), lg.edges.end());
    return lg;
}

struct split_result {
    digraph dprime;
    std::vector<int> origin;  // origin[v'] = vertex of the source digraph
};

/// Splits every multi-in sink into indegree-1 sinks and every multi-out
/// source into outdegree-1 sources.  One simultaneous pass reaches the
/// fixpoint: splitting changes no other vertex's degrees, and the copies it
/// creates have degree 1.  Arc ids are preserved positionally, so the line
/// graphs of D and D' are identical under the identity on arc ids.
inline split_result split_transform(const digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (d.is_isolated(v)) throw isolated_vertex_error(v);

    int next_id = 0;
    std::vector<int> plain_id(static_cast<std::size_t>(d.order()), -1);
    std::vector<int> origin;
    auto fresh = [&](int source_vertex) {
        origin.push_back(source_vertex);
        return next_id++;
    };

    enum class rule { keep, split_sink, split_source };
    std::vector<rule> rules(static_cast<std::size_t>(d.order()), rule::keep);
    for (int v = 0; v < d.order(); ++v) {
        if (d.out_degree(v) == 0 && d.in_degree(v) >= 2)
            rules[static_cast<std::size_t>(v)] = rule::split_sink;
        else if (d.in_degree(v) == 0 && d.out_degree(v) >= 2)
            rules[static_cast<std::size_t>(v)] = rule::split_source;
        else
            plain_id[static_cast<std::size_t>(v)] = fresh(v);
    }

    // per-arc endpoint replacements for split vertices
    std::vector<int> tail_copy(static_cast<std::size_t>(d.size()), -1);
    std::vector<int> head_copy(static_cast<std::size_t>(d.size()), -1);
    for (int v = 0; v < d.order(); ++v) {
        if (rules[static_cast<std::size_t>(v)] == rule::split_sink)
            for (int a : d.in_arcs(v)) head_copy[static_cast<std::size_t>(a)] = fresh(v);
        else if (rules[static_cast<std::size_t>(v)] == rule::split_source)
            for (int a : d.out_arcs(v)) tail_copy[static_cast<std::size_t>(a)] = fresh(v);
    }

    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(d.size()));
    for (int id = 0; id < d.size(); ++id) {
        const arc& a = d.arc_at(id);
        int t = tail_copy[static_cast<std::size_t>(id)];
        if (t < 0) t = plain_id[static_cast<std::size_t>(a.tail)];
        int h = head_copy[static_cast<std::size_t>(id)];
        if (h < 0) h = plain_id[static_cast<std::size_t>(a.head)];
        arcs.push_back({t, h});
    }
    return split_result{digraph(next_id, std::move(arcs)), std::move(origin)};
}

struct connectivity_report {
    bool connected = false;
    bool methods_agree = false;
    friend bool operator==(const connectivity_report&, const connectivity_report&) = default;
};

/// Decides connectivity of L(D) two ways: breadth-first search on L(D)
/// itself, and weak connectivity of the split transform D'.  Requires D
/// strict, asymmetric, and free of isolated vertices.
inline connectivity_report line_graph_connected(const digraph& d, p3_policy policy) {
    if (!d.is_asymmetric())
        throw precondition_error("line-graph connectivity requires an asymmetric digraph");
    for (int v = 0; v < d.order(); ++v)
        if (d.is_isolated(v)) throw isolated_vertex_error(v);

    ugraph lg = build_line_graph(d, policy).to_ugraph();
    bool via_bfs = static_cast<int>(components(lg).size()) <= 1;
    bool via_split = weakly_connected(split_transform(d).dprime);
    return connectivity_report{via_bfs, via_bfs == via_split};
}

enum class extremal_kind { none, transitive_tournament_3, balanced_bipartite };

inline const char* to_string(extremal_kind k) {
    switch (k) {
        case extremal_kind::transitive_tournament_3: return "transitive_tournament_3";
        case extremal_kind::balanced_bipartite: return "balanced_bipartite";
        default: return "none";
    }
}

struct component_report {
    int num_components = 0;
    long long f_n = 0;             // (n^2-1)/4 for odd n, n^2/4 for even n
    bool bound_holds = false;      // num_components <= f_n
    bool is_extremal = false;      // num_components == f_n
    extremal_kind kind = extremal_kind::none;
    bool edgeless = false;                    // L(D) has no edges
    std::optional<bool> lemma_condition;      // source/sink bipartition test;
                                              // set only when D has no isolated vertex
};

namespace detail {

inline bool is_transitive_tournament_3(const digraph& d) {
    return d.order() == 3 && is_tournament(d) && topological_order(d).has_value();
}

/// D equals an orientation of a balanced complete bipartite graph with every
/// arc X -> Y.  The only candidate for X is the set of in-degree-0 vertices.
inline bool is_balanced_complete_bipartite_orientation(const digraph& d) {
    int n = d.order();
    long long x_size = 0;
    for (int v = 0; v < n; ++v)
        if (d.in_degree(v) == 0) ++x_size;
    long long y_size = n - x_size;
    if (x_size - y_size > 1 || y_size - x_size > 1) return false;
    if (static_cast<long long>(d.size()) != x_size * y_size) return false;
    for (const arc& a : d.arcs())
        if (d.in_degree(a.tail) != 0 || d.out_degree(a.head) != 0) return false;
    // arc count equals |X|*|Y| and every arc runs source-set -> sink-set,
    // so the orientation is complete
    return true;
}

}  // namespace detail

/// Component count of L(D) against the extremal bound, with detection of the
/// two equality families.  Also reports the edgeless test: L(D) has no edge
/// iff every vertex of D is a pure source or a pure sink (checked only when
/// D has no isolated vertices, the hypothesis of that equivalence).
inline component_report component_analysis(const digraph& d,
                                           p3_policy policy = p3_policy::strict_path) {
    if (!d.is_asymmetric())
        throw precondition_error("component analysis requires an asymmetric digraph");
    component_report r;
    ugraph lg = build_line_graph(d, policy).to_ugraph();
    r.num_components = static_cast<int>(components(lg).size());
    long long n = d.order();
    r.f_n = (n % 2 == 1) ? (n * n - 1) / 4 : n * n / 4;
    r.bound_holds = r.num_components <= r.f_n;
    r.is_extremal = r.num_components == r.f_n;
    if (detail::is_transitive_tournament_3(d))
        r.kind = extremal_kind::transitive_tournament_3;
    else if (detail::is_balanced_complete_bipartite_orientation(d))
        r.kind = extremal_kind::balanced_bipartite;
    r.edgeless = lg.size() == 0;
    bool has_isolated = false;
    for (int v = 0; v < d.order(); ++v)
        if (d.is_isolated(v)) has_isolated = true;
    if (!has_isolated) {
        bool all_source_or_sink = true;
        for (int v = 0; v < d.order(); ++v)
            if (d.in_degree(v) > 0 && d.out_degree(v) > 0) all_source_or_sink = false;
        r.lemma_condition = all_source_or_sink;
    }
    return r;
}

}  // namespace p3dec
