#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "line_graph.hpp"
#include "ugraph.hpp"

namespace p3dec {

/// Eulerian: at least one arc, in-degree equals out-degree everywhere, and
/// the non-isolated vertices form a single weakly connected block.
inline bool is_eulerian(const digraph& d) {
    if (d.size() == 0) return false;
    for (int v = 0; v < d.order(); ++v)
        if (d.in_degree(v) != d.out_degree(v)) return false;
    int start = -1, active = 0;
    for (int v = 0; v < d.order(); ++v)
        if (!d.is_isolated(v)) {
            if (start == -1) start = v;
            ++active;
        }
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    std::vector<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++reached;
        auto push = [&](int to) {
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                queue.push_back(to);
            }
        };
        for (int id : d.out_arcs(v)) push(d.arc_at(id).head);
        for (int id : d.in_arcs(v)) push(d.arc_at(id).tail);
    }
    return reached == active;
}

/// Euler tour as the arc id sequence.  Hierholzer with splicing: every walk
/// greedily takes the lowest unused out-arc, and closed sub-walks are spliced
/// in at the first position whose tail still has unused arcs.  The result is
/// the unique tour this rule produces, so repeated runs agree.
inline std::vector<int> euler_tour(const digraph& d) {
    if (!is_eulerian(d)) throw not_eulerian_error("digraph is not eulerian");
    std::vector<std::size_t> next_out(static_cast<std::size_t>(d.order()), 0);
    auto take = [&](int v) -> int {
        auto& cursor = next_out[static_cast<std::size_t>(v)];
        const auto& outs = d.out_arcs(v);
        if (cursor >= outs.size()) return -1;
        return outs[cursor++];
    };
    auto walk = [&](int v) {
        std::vector<int> path;
        for (int a = take(v); a != -1; a = take(v)) {
            path.push_back(a);
            v = d.arc_at(a).head;
        }
        return path;
    };
    int start = 0;
    while (d.out_degree(start) == 0) ++start;
    std::vector<int> tour = walk(start);
    for (std::size_t i = 0; i < tour.size();) {
        int v = d.arc_at(tour[i]).tail;
        std::vector<int> sub = walk(v);
        if (sub.empty()) {
            ++i;
            continue;
        }
        tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(i), sub.begin(), sub.end());
    }
    return tour;
}

/// True when the sequence visits every line-graph vertex exactly once and
/// consecutive entries (cyclically) are adjacent in L.
inline bool verify_hamilton_cycle(const line_graph& lg, const std::vector<int>& cycle) {
    if (lg.vertex_count < 3) return false;
    if (static_cast<int>(cycle.size()) != lg.vertex_count) return false;
    std::vector<char> seen(static_cast<std::size_t>(lg.vertex_count), 0);
    for (int v : cycle) {
        if (v < 0 || v >= lg.vertex_count || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    ugraph g = lg.to_ugraph();
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

/// Hamilton cycle of L(D) for an eulerian digraph with at least 3 arcs: the
/// Euler tour read as a cyclic arc sequence.  Under StrictPath a 2-cycle of D
/// can appear consecutively in every tour, in which case the cycle is valid
/// only under AllowClosed and a policy mismatch is reported instead.
inline std::vector<int> line_hamilton_cycle(const digraph& d, p3_policy policy) {
    if (!is_eulerian(d)) throw not_eulerian_error("digraph is not eulerian");
    if (d.size() < 3) throw too_small_error("need at least 3 arcs, have " +
                                            std::to_string(d.size()));
    std::vector<int> tour = euler_tour(d);
    if (!verify_hamilton_cycle(build_line_graph(d, policy), tour)) {
        if (policy == p3_policy::strict_path &&
            verify_hamilton_cycle(build_line_graph(d, p3_policy::allow_closed), tour))
            throw policy_mismatch_error(
                "tour is hamiltonian in L only when 2-cycles may close up");
        throw not_eulerian_error("internal: tour failed line-graph verification");
    }
    return tour;
}

}  // namespace p3dec
