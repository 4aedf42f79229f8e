#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace p3dec {

/// Simple undirected graph on [0, n); no loops, no parallel edges.
/// Edge ids are positions in the construction-order edge list.
class ugraph {
public:
    ugraph(int order, std::vector<std::pair<int, int>> edges)
        : n_(order), edges_(std::move(edges)) {
        if (order < 0) throw vertex_out_of_range_error("negative order");
        adj_.assign(static_cast<std::size_t>(n_), {});
        inc_.assign(static_cast<std::size_t>(n_), {});
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
            auto& [u, v] = edges_[static_cast<std::size_t>(id)];
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_)
                throw vertex_out_of_range_error("edge " + std::to_string(id) +
                                                " endpoint out of range");
            if (u == v) throw loop_arc_error(id);
        }
        std::vector<std::pair<std::pair<int, int>, int>> keyed;
        keyed.reserve(edges_.size());
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id)
            keyed.emplace_back(edges_[static_cast<std::size_t>(id)], id);
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw parallel_arc_error(keyed[i].second);
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
            auto [u, v] = edges_[static_cast<std::size_t>(id)];
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
            inc_[static_cast<std::size_t>(u)].push_back(id);
            inc_[static_cast<std::size_t>(v)].push_back(id);
        }
        for (auto& row : adj_) std::sort(row.begin(), row.end());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::pair<int, int> edge_at(int id) const {
        if (id < 0 || id >= size())
            throw vertex_out_of_range_error("edge id " + std::to_string(id) + " out of range");
        return edges_[static_cast<std::size_t>(id)];
    }

    /// Neighbor vertex ids, ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[checked(v)]; }
    /// Incident edge ids, ascending.
    const std::vector<int>& incident(int v) const { return inc_[checked(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[checked(v)].size()); }

    bool adjacent(int u, int v) const {
        const auto& row = adj_[checked(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

private:
    std::size_t checked(int v) const {
        if (v < 0 || v >= n_)
            throw vertex_out_of_range_error("vertex " + std::to_string(v) + " out of range");
        return static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_, inc_;
};

inline std::vector<char> mask_of(int n, const std::vector<int>& vertices) {
    std::vector<char> mask(static_cast<std::size_t>(n), 0);
    for (int v : vertices) mask[static_cast<std::size_t>(v)] = 1;
    return mask;
}

/// Connected components of g - removed, each sorted, ordered by minimum vertex.
inline std::vector<std::vector<int>> components_minus(const ugraph& g,
                                                      const std::vector<char>& removed) {
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)] || removed[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int to : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(to)] &&
                    !removed[static_cast<std::size_t>(to)]) {
                    seen[static_cast<std::size_t>(to)] = 1;
                    stack.push_back(to);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<std::vector<int>> components(const ugraph& g) {
    return components_minus(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0));
}

/// Number of odd-order components of g - removed.
inline int odd_component_count(const ugraph& g, const std::vector<char>& removed) {
    int odd = 0;
    for (const auto& comp : components_minus(g, removed))
        if (comp.size() % 2 == 1) ++odd;
    return odd;
}

/// Vertices of g - removed with no neighbor outside `removed`, sorted.
inline std::vector<int> isolated_vertices_minus(const ugraph& g,
                                                const std::vector<char>& removed) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        bool isolated = true;
        for (int to : g.neighbors(v))
            if (!removed[static_cast<std::size_t>(to)]) {
                isolated = false;
                break;
            }
        if (isolated) out.push_back(v);
    }
    return out;
}

inline int isolated_count_minus(const ugraph& g, const std::vector<char>& removed) {
    return static_cast<int>(isolated_vertices_minus(g, removed).size());
}

}  // namespace p3dec
