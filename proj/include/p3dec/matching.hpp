#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ugraph.hpp"

namespace p3dec {

class matching {
public:
    explicit matching(std::vector<int> mates) : mate_(std::move(mates)) {}

    int size() const {
        int matched = 0;
        for (int m : mate_)
            if (m >= 0) ++matched;
        return matched / 2;
    }

    int mate_of(int v) const { return mate_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& mates() const { return mate_; }

    bool is_perfect() const {
        for (int m : mate_)
            if (m < 0) return false;
        return true;
    }

    /// Matched pairs as (lo, hi), sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < static_cast<int>(mate_.size()); ++v)
            if (mate_[static_cast<std::size_t>(v)] > v)
                out.emplace_back(v, mate_[static_cast<std::size_t>(v)]);
        return out;
    }

private:
    std::vector<int> mate_;
};

namespace detail {

/// Edmonds' blossom algorithm, simple O(V*E) search per augmentation.
/// Deterministic: roots scanned in increasing id order, adjacency ascending,
/// FIFO queue.  After run(), search_from never augments and its `outer` set
/// is the even (exposable) side of the alternating forest from that root.
class edmonds_matcher {
public:
    explicit edmonds_matcher(const ugraph& g)
        : g_(g),
          n_(g.order()),
          mate_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_)),
          outer_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0),
          seen_(static_cast<std::size_t>(n_), 0) {}

    void run() {
        for (int v = 0; v < n_; ++v)
            if (mate_[static_cast<std::size_t>(v)] == -1) {
                int end = search_from(v);
                if (end != -1) augment(end);
            }
    }

    /// Union over all exposed roots of the outer vertices of their
    /// alternating search forests.  Call only after run().
    std::vector<char> exposable_vertices() {
        std::vector<char> out(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            if (mate_[static_cast<std::size_t>(v)] == -1) {
                search_from(v);
                for (int u = 0; u < n_; ++u)
                    if (outer_[static_cast<std::size_t>(u)]) out[static_cast<std::size_t>(u)] = 1;
            }
        return out;
    }

    std::vector<int> mates() const { return mate_; }

private:
    int search_from(int root) {
        std::fill(outer_.begin(), outer_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        queue_.clear();
        outer_[static_cast<std::size_t>(root)] = 1;
        queue_.push_back(root);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    mate_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (mate_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
                    contract_blossom(v, to);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (mate_[static_cast<std::size_t>(to)] == -1) return to;
                    int next = mate_[static_cast<std::size_t>(to)];
                    outer_[static_cast<std::size_t>(next)] = 1;
                    queue_.push_back(next);
                }
            }
        }
        return -1;
    }

    // two even endpoints met: shrink the odd cycle through their common base
    void contract_blossom(int v, int to) {
        int stem = common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, stem, to);
        mark_path(to, stem, v);
        for (int i = 0; i < n_; ++i)
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = stem;
                if (!outer_[static_cast<std::size_t>(i)]) {
                    outer_[static_cast<std::size_t>(i)] = 1;
                    queue_.push_back(i);
                }
            }
    }

    int common_base(int a, int b) {
        std::fill(seen_.begin(), seen_.end(), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen_[static_cast<std::size_t>(a)] = 1;
            if (mate_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen_[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(
                base_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mate_[static_cast<std::size_t>(v)];
            v = parent_[static_cast<std::size_t>(child)];
        }
    }

    void augment(int end) {
        int v = end;
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int next = mate_[static_cast<std::size_t>(pv)];
            mate_[static_cast<std::size_t>(v)] = pv;
            mate_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const ugraph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_, queue_;
    std::vector<char> outer_, in_blossom_, seen_;
};

}  // namespace detail

inline matching max_matching(const ugraph& g) {
    detail::edmonds_matcher m(g);
    m.run();
    return matching(m.mates());
}

struct gallai_edmonds_result {
    std::vector<int> d_set;  // vertices some maximum matching leaves exposed
    std::vector<int> a_set;  // N(D) \ D
    std::vector<int> c_set;  // the rest
    int deficiency = 0;      // exposed vertices of any maximum matching
};

inline gallai_edmonds_result gallai_edmonds(const ugraph& g) {
    detail::edmonds_matcher m(g);
    m.run();
    std::vector<char> in_d = m.exposable_vertices();
    gallai_edmonds_result r;
    std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        if (in_d[static_cast<std::size_t>(v)]) {
            r.d_set.push_back(v);
            for (int to : g.neighbors(v))
                if (!in_d[static_cast<std::size_t>(to)]) in_a[static_cast<std::size_t>(to)] = 1;
        }
    for (int v = 0; v < g.order(); ++v) {
        if (in_d[static_cast<std::size_t>(v)]) continue;
        if (in_a[static_cast<std::size_t>(v)])
            r.a_set.push_back(v);
        else
            r.c_set.push_back(v);
    }
    r.deficiency = g.order() - 2 * matching(m.mates()).size();
    return r;
}

struct tutte_witness_result {
    std::vector<int> s;       // sorted vertex set
    int odd_components = 0;   // c_o(G - S), strictly greater than |S|
};

/// Deterministic Tutte set for a graph without a perfect matching.  Starts
/// from the Gallai-Edmonds A-set, whose deficiency c_o(G-A) - |A| is already
/// maximal, then absorbs the lowest vertex of each even component until every
/// component of G - S is odd; each absorption keeps the deficiency maximal.
inline tutte_witness_result tutte_witness(const ugraph& g) {
    gallai_edmonds_result ge = gallai_edmonds(g);
    if (ge.deficiency == 0) throw has_perfect_matching_error();
    std::vector<char> removed = mask_of(g.order(), ge.a_set);
    std::vector<int> s = ge.a_set;
    for (;;) {
        bool moved = false;
        for (const auto& comp : components_minus(g, removed)) {
            if (comp.size() % 2 == 0) {
                removed[static_cast<std::size_t>(comp.front())] = 1;
                s.push_back(comp.front());
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    std::sort(s.begin(), s.end());
    return tutte_witness_result{s, odd_component_count(g, removed)};
}

/// Hopcroft-Karp.  `left` marks one side; every edge must cross.
inline matching bipartite_max_matching(const ugraph& g, const std::vector<char>& left) {
    int n = g.order();
    if (static_cast<int>(left.size()) != n)
        throw not_bipartite_error("side mask size does not match graph order");
    for (auto [u, v] : g.edges())
        if (left[static_cast<std::size_t>(u)] == left[static_cast<std::size_t>(v)])
            throw not_bipartite_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") does not cross the given sides");

    constexpr int inf = 1 << 30;
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), inf);

    auto bfs = [&]() {
        std::vector<int> queue;
        std::fill(dist.begin(), dist.end(), inf);
        for (int v = 0; v < n; ++v)
            if (left[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
        bool found_free_right = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g.neighbors(v)) {
                int back = mate[static_cast<std::size_t>(to)];
                if (back == -1) {
                    found_free_right = true;
                } else if (dist[static_cast<std::size_t>(back)] == inf) {
                    dist[static_cast<std::size_t>(back)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(back);
                }
            }
        }
        return found_free_right;
    };

    std::vector<int> it(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        const auto& nbr = g.neighbors(v);
        for (int& i = it[static_cast<std::size_t>(v)]; i < static_cast<int>(nbr.size()); ++i) {
            int to = nbr[static_cast<std::size_t>(i)];
            int back = mate[static_cast<std::size_t>(to)];
            if (back == -1 || (dist[static_cast<std::size_t>(back)] ==
                                   dist[static_cast<std::size_t>(v)] + 1 &&
                               self(self, back))) {
                mate[static_cast<std::size_t>(v)] = to;
                mate[static_cast<std::size_t>(to)] = v;
                return true;
            }
        }
        dist[static_cast<std::size_t>(v)] = inf;
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int v = 0; v < n; ++v)
            if (left[static_cast<std::size_t>(v)] && mate[static_cast<std::size_t>(v)] == -1)
                dfs(dfs, v);
    }
    return matching(std::move(mate));
}

struct hall_violator_result {
    std::vector<int> s;          // sorted subset of the left side
    int neighborhood_size = 0;   // |N(S)|, strictly less than |S|
};

namespace detail {

/// Left vertices alternating-reachable from unmatched left vertices, plus the
/// right vertices reached on the way (all of which are matched).
inline void alternating_reach(const ugraph& g, const std::vector<char>& left,
                              const matching& m, std::vector<char>& left_reached,
                              std::vector<char>& right_reached) {
    int n = g.order();
    left_reached.assign(static_cast<std::size_t>(n), 0);
    right_reached.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (left[static_cast<std::size_t>(v)] && m.mate_of(v) == -1) {
            left_reached[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int to : g.neighbors(v)) {
            if (right_reached[static_cast<std::size_t>(to)]) continue;
            right_reached[static_cast<std::size_t>(to)] = 1;
            int back = m.mate_of(to);
            // `to` must be matched: an unmatched right neighbor would extend
            // an augmenting path, impossible for a maximum matching
            if (back != -1 && !left_reached[static_cast<std::size_t>(back)]) {
                left_reached[static_cast<std::size_t>(back)] = 1;
                queue.push_back(back);
            }
        }
    }
}

}  // namespace detail

/// Hall violator S on the left side: |N(S)| < |S|.  Requires that a maximum
/// matching leaves some left vertex unmatched.
inline hall_violator_result hall_violator(const ugraph& g, const std::vector<char>& left) {
    matching m = bipartite_max_matching(g, left);
    bool any_unmatched = false;
    for (int v = 0; v < g.order(); ++v)
        if (left[static_cast<std::size_t>(v)] && m.mate_of(v) == -1) any_unmatched = true;
    if (!any_unmatched) throw no_violator_error();

    std::vector<char> left_reached, right_reached;
    detail::alternating_reach(g, left, m, left_reached, right_reached);
    hall_violator_result r;
    for (int v = 0; v < g.order(); ++v) {
        if (left_reached[static_cast<std::size_t>(v)]) r.s.push_back(v);
        if (right_reached[static_cast<std::size_t>(v)]) ++r.neighborhood_size;
    }
    return r;
}

struct fractional_pm_result {
    bool exists = false;
    std::optional<std::vector<int>> witness;  // S with i(G - S) > |S| when !exists
};

namespace detail {

/// Bipartite double cover: v' = v on the left, v'' = n + v on the right;
/// each edge uv becomes u'v'' and v'u''.  G has a fractional perfect
/// matching iff the cover has a perfect matching.
inline ugraph double_cover(const ugraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges().size());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, g.order() + v);
        edges.emplace_back(v, g.order() + u);
    }
    return ugraph(2 * g.order(), std::move(edges));
}

}  // namespace detail

/// Decides existence through the double cover.  When none exists and
/// extract_witness is set, maps the cover's Hall-violator structure down to a
/// witness S, validates i(G-S) > |S| by direct recount, and falls back to an
/// exhaustive subset scan for |V| <= 20.
inline fractional_pm_result fractional_pm(const ugraph& g, bool extract_witness = true) {
    ugraph cover = detail::double_cover(g);
    std::vector<char> left(static_cast<std::size_t>(2 * g.order()), 0);
    for (int v = 0; v < g.order(); ++v) left[static_cast<std::size_t>(v)] = 1;
    matching m = bipartite_max_matching(cover, left);
    if (m.is_perfect()) return fractional_pm_result{true, std::nullopt};
    if (!extract_witness) return fractional_pm_result{false, std::nullopt};

    std::vector<char> left_reached, right_reached;
    detail::alternating_reach(cover, left, m, left_reached, right_reached);
    // a = originals whose left copy is reachable; b = originals whose right
    // copy is reachable; every neighbor of an a-vertex lies in b, so a \ b is
    // independent and N(a \ b) is a witness candidate
    std::vector<char> in_b(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        if (right_reached[static_cast<std::size_t>(g.order() + v)])
            in_b[static_cast<std::size_t>(v)] = 1;
    std::vector<char> candidate(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        if (left_reached[static_cast<std::size_t>(v)] && !in_b[static_cast<std::size_t>(v)])
            for (int to : g.neighbors(v)) candidate[static_cast<std::size_t>(to)] = 1;

    auto witness_holds = [&](const std::vector<char>& s_mask) {
        int s_size = 0;
        for (char c : s_mask) s_size += c;
        return isolated_count_minus(g, s_mask) > s_size;
    };

    if (witness_holds(candidate)) {
        std::vector<int> s;
        for (int v = 0; v < g.order(); ++v)
            if (candidate[static_cast<std::size_t>(v)]) s.push_back(v);
        return fractional_pm_result{false, std::move(s)};
    }

    if (g.order() <= 20) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << g.order()); ++bits) {
            std::vector<char> s_mask(static_cast<std::size_t>(g.order()), 0);
            for (int v = 0; v < g.order(); ++v)
                if ((bits >> v) & 1u) s_mask[static_cast<std::size_t>(v)] = 1;
            if (witness_holds(s_mask)) {
                std::vector<int> s;
                for (int v = 0; v < g.order(); ++v)
                    if (s_mask[static_cast<std::size_t>(v)]) s.push_back(v);
                return fractional_pm_result{false, std::move(s)};
            }
        }
    }
    throw witness_search_exhausted_error("no fractional witness found for order " +
                                         std::to_string(g.order()));
}

}  // namespace p3dec
