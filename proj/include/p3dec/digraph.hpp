#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace p3dec {

using vertex_id = int;

struct arc {
    vertex_id tail = 0;
    vertex_id head = 0;
    friend bool operator==(const arc&, const arc&) = default;
};

/// Subset of the vertex range [0, n) of a fixed digraph.
/// Backed by a single 64-bit word, so n <= 64.
class vertex_set {
public:
    static constexpr int max_universe = 64;

    explicit vertex_set(int universe) : n_(universe) {
        if (universe < 0 || universe > max_universe)
            throw vertex_out_of_range_error("vertex_set universe must be in [0, 64], got " +
                                            std::to_string(universe));
    }

    static vertex_set of(int universe, std::initializer_list<int> members) {
        vertex_set s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    static vertex_set from_bits(int universe, std::uint64_t bits) {
        vertex_set s(universe);
        if (universe < 64 && (bits >> universe) != 0)
            throw vertex_out_of_range_error("bits outside vertex_set universe");
        s.bits_ = bits;
        return s;
    }

    static vertex_set full(int universe) {
        vertex_set s(universe);
        s.bits_ = universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
        return s;
    }

    int universe() const { return n_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int v) const {
        check(v);
        return (bits_ >> v) & 1u;
    }

    void insert(int v) {
        check(v);
        bits_ |= std::uint64_t{1} << v;
    }

    void erase(int v) {
        check(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    vertex_set complement() const { return from_bits(n_, full(n_).bits_ & ~bits_); }

    bool intersects(const vertex_set& other) const { return (bits_ & other.bits_) != 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = 0; v < n_; ++v)
            if ((bits_ >> v) & 1u) out.push_back(v);
        return out;
    }

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw vertex_out_of_range_error("vertex " + std::to_string(v) +
                                            " outside universe of size " + std::to_string(n_));
    }

    std::uint64_t bits_ = 0;
    int n_ = 0;
};

/// Ordered partition (X, Y, Z) of the vertices of one digraph.
/// Z is the remainder; X and Y carry the roles in the cut inequality.
struct partition3 {
    vertex_set x, y, z;

    partition3() : x(0), y(0), z(0) {}
    partition3(vertex_set x_, vertex_set y_, vertex_set z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static partition3 of(int universe, std::initializer_list<int> xs,
                         std::initializer_list<int> ys) {
        vertex_set x = vertex_set::of(universe, xs);
        vertex_set y = vertex_set::of(universe, ys);
        vertex_set z = vertex_set::from_bits(universe, vertex_set::full(universe).bits() &
                                                           ~(x.bits() | y.bits()));
        return partition3{x, y, z};
    }

    friend bool operator==(const partition3&, const partition3&) = default;
};

/// Strict digraph: no loops, no two arcs with the same (tail, head).
/// Arc ids are positions in the construction-order arc list and are the
/// vertex ids of the line graph.  Immutable after construction.
class digraph {
public:
    digraph(int order, std::vector<arc> arcs) : n_(order), arcs_(std::move(arcs)) {
        if (order < 0) throw vertex_out_of_range_error("negative order");
        out_.assign(static_cast<std::size_t>(n_), {});
        in_.assign(static_cast<std::size_t>(n_), {});
        index_.reserve(arcs_.size());
        for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
            const arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
                throw vertex_out_of_range_error("arc " + std::to_string(id) +
                                                " endpoint outside [0, " + std::to_string(n_) +
                                                ")");
            if (a.tail == a.head) throw loop_arc_error(id);
            index_.emplace_back(key(a.tail, a.head), id);
        }
        std::sort(index_.begin(), index_.end());
        for (std::size_t i = 1; i < index_.size(); ++i)
            if (index_[i].first == index_[i - 1].first)
                throw parallel_arc_error(index_[i].second);
        for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
            out_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(id)].tail)].push_back(id);
            in_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(id)].head)].push_back(id);
        }
        asymmetric_ = true;
        for (const arc& a : arcs_)
            if (find_arc(a.head, a.tail)) {
                asymmetric_ = false;
                break;
            }
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<arc>& arcs() const { return arcs_; }

    const arc& arc_at(int id) const {
        if (id < 0 || id >= size())
            throw vertex_out_of_range_error("arc id " + std::to_string(id) + " out of range");
        return arcs_[static_cast<std::size_t>(id)];
    }

    // Strictness is a class invariant; the flag exists for symmetry with is_asymmetric.
    bool is_strict() const { return true; }
    bool is_asymmetric() const { return asymmetric_; }

    std::optional<int> find_arc(vertex_id tail, vertex_id head) const {
        auto it = std::lower_bound(index_.begin(), index_.end(),
                                   std::pair<std::int64_t, int>{key(tail, head), -1});
        if (it != index_.end() && it->first == key(tail, head)) return it->second;
        return std::nullopt;
    }

    /// Arc ids leaving v, ascending.
    const std::vector<int>& out_arcs(vertex_id v) const { return out_[checked(v)]; }
    /// Arc ids entering v, ascending.
    const std::vector<int>& in_arcs(vertex_id v) const { return in_[checked(v)]; }

    int out_degree(vertex_id v) const { return static_cast<int>(out_[checked(v)].size()); }
    int in_degree(vertex_id v) const { return static_cast<int>(in_[checked(v)].size()); }

    bool is_isolated(vertex_id v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

    friend bool operator==(const digraph& a, const digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::int64_t key(vertex_id tail, vertex_id head) const {
        return static_cast<std::int64_t>(tail) * n_ + head;
    }

    std::size_t checked(vertex_id v) const {
        if (v < 0 || v >= n_)
            throw vertex_out_of_range_error("vertex " + std::to_string(v) + " out of range");
        return static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::pair<std::int64_t, int>> index_;
    bool asymmetric_ = true;
};

inline void require_universe(const digraph& d, const vertex_set& s) {
    if (s.universe() != d.order())
        throw vertex_out_of_range_error("vertex_set universe " + std::to_string(s.universe()) +
                                        " does not match digraph order " +
                                        std::to_string(d.order()));
}

/// a(X, Y): number of arcs with tail in X and head in Y.
inline int arc_count_between(const digraph& d, const vertex_set& from, const vertex_set& to) {
    require_universe(d, from);
    require_universe(d, to);
    int count = 0;
    for (const arc& a : d.arcs())
        if (from.contains(a.tail) && to.contains(a.head)) ++count;
    return count;
}

struct degree_pair {
    int d_plus = 0;
    int d_minus = 0;
    friend bool operator==(const degree_pair&, const degree_pair&) = default;
};

/// d+(X) = |arcs leaving X|, d-(X) = |arcs entering X|.
inline degree_pair cut_degrees(const digraph& d, const vertex_set& x) {
    require_universe(d, x);
    degree_pair out;
    for (const arc& a : d.arcs()) {
        bool t = x.contains(a.tail), h = x.contains(a.head);
        if (t && !h) ++out.d_plus;
        if (!t && h) ++out.d_minus;
    }
    return out;
}

inline bool is_valid_partition(const digraph& d, const partition3& p) {
    if (p.x.universe() != d.order() || p.y.universe() != d.order() ||
        p.z.universe() != d.order())
        return false;
    std::uint64_t all = vertex_set::full(d.order()).bits();
    if ((p.x.bits() & p.y.bits()) || (p.x.bits() & p.z.bits()) || (p.y.bits() & p.z.bits()))
        return false;
    return (p.x.bits() | p.y.bits() | p.z.bits()) == all;
}

/// Slack of the cut inequality for the ordered partition (X, Y, Z):
///   a(Y,X) + a(X) + a(Y) + a(Z,X) + a(Y,Z) - a(X,Y).
/// Negative slack refutes the inequality.
inline int partition_slack(const digraph& d, const partition3& p) {
    if (!is_valid_partition(d, p))
        throw invalid_partition_error("X, Y, Z must partition the vertex set");
    int a_xy = arc_count_between(d, p.x, p.y);
    int a_yx = arc_count_between(d, p.y, p.x);
    int a_x = arc_count_between(d, p.x, p.x);
    int a_y = arc_count_between(d, p.y, p.y);
    int a_zx = arc_count_between(d, p.z, p.x);
    int a_yz = arc_count_between(d, p.y, p.z);
    return a_yx + a_x + a_y + a_zx + a_yz - a_xy;
}

/// Decodes a base-3 mask into a partition: digit 0 -> Z, 1 -> X, 2 -> Y,
/// vertex 0 in the least significant digit.  Shared by the exhaustive
/// certificate fallback and the brute-force oracle so that "lowest mask"
/// means the same partition everywhere.
inline partition3 partition_from_mask(int n, std::uint64_t mask) {
    vertex_set x(n), y(n), z(n);
    for (int v = 0; v < n; ++v) {
        switch (mask % 3) {
            case 0: z.insert(v); break;
            case 1: x.insert(v); break;
            default: y.insert(v); break;
        }
        mask /= 3;
    }
    return partition3{x, y, z};
}

inline bool is_tournament(const digraph& d) {
    int n = d.order();
    if (d.size() * 2 != n * (n - 1)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!d.find_arc(u, v) && !d.find_arc(v, u)) return false;
    return d.is_asymmetric();
}

/// True iff every arc crosses between X and its complement (either direction).
inline bool is_bipartite_with(const digraph& d, const vertex_set& x) {
    require_universe(d, x);
    for (const arc& a : d.arcs())
        if (x.contains(a.tail) == x.contains(a.head)) return false;
    return true;
}

namespace detail {

inline std::vector<char> reach_directed(const digraph& d, int start, bool reversed) {
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& ids = reversed ? d.in_arcs(v) : d.out_arcs(v);
        for (int id : ids) {
            const arc& a = d.arc_at(id);
            int to = reversed ? a.tail : a.head;
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// Connectivity of the underlying undirected graph over all n vertices.
inline bool weakly_connected(const digraph& d) {
    int n = d.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto push = [&](int to) {
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                ++visited;
                stack.push_back(to);
            }
        };
        for (int id : d.out_arcs(v)) push(d.arc_at(id).head);
        for (int id : d.in_arcs(v)) push(d.arc_at(id).tail);
    }
    return visited == n;
}

inline bool strongly_connected(const digraph& d) {
    int n = d.order();
    if (n <= 1) return true;
    auto fwd = detail::reach_directed(d, 0, false);
    auto bwd = detail::reach_directed(d, 0, true);
    for (int v = 0; v < n; ++v)
        if (!fwd[static_cast<std::size_t>(v)] || !bwd[static_cast<std::size_t>(v)]) return false;
    return true;
}

/// Kahn's algorithm; nullopt iff a directed cycle exists.
inline std::optional<std::vector<int>> topological_order(const digraph& d) {
    int n = d.order();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const arc& a : d.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    std::vector<int> order;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        order.push_back(v);
        for (int id : d.out_arcs(v))
            if (--indeg[static_cast<std::size_t>(d.arc_at(id).head)] == 0)
                queue.push_back(d.arc_at(id).head);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

struct structure_report {
    bool tournament = false;
    std::optional<bool> bipartite_with_x;
    bool weakly_conn = false;
    bool strongly_conn = false;
};

inline structure_report structural_predicates(const digraph& d,
                                              const std::optional<vertex_set>& x = std::nullopt) {
    structure_report r;
    r.tournament = is_tournament(d);
    if (x) r.bipartite_with_x = is_bipartite_with(d, *x);
    r.weakly_conn = weakly_connected(d);
    r.strongly_conn = strongly_connected(d);
    return r;
}

}  // namespace p3dec
