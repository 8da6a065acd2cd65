#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace packcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with each row sorted, so neighbor
/// iteration is a contiguous span and adjacency tests are a binary search over
/// at most three entries for subcubic graphs.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph. Throws std::invalid_argument on a self-loop, a
    /// repeated edge, or an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        std::vector<std::vector<Vertex>> rows(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                            std::to_string(v));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            rows[u].push_back(v);
            rows[v].push_back(u);
        }
        Graph g;
        g.offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            auto& row = rows[v];
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end())
                throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
            g.offsets_[v + 1] = g.offsets_[v] + row.size();
        }
        g.adjacency_.reserve(g.offsets_[n]);
        for (auto& row : rows)
            g.adjacency_.insert(g.adjacency_.end(), row.begin(), row.end());
        g.edge_count_ = edges.size();
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Same as from_edges, additionally rejecting any vertex of degree > 3.
    static Graph subcubic(std::size_t n, std::span<const Edge> edges) {
        Graph g = from_edges(n, edges);
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) > 3)
                throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(g.degree(v)) + " > 3");
        return g;
    }

    std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const {
        check(v);
        return offsets_[v + 1] - offsets_[v];
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (Vertex v = 0; v < order(); ++v)
            d = std::max(d, degree(v));
        return d;
    }

    bool is_subcubic() const { return max_degree() <= 3; }

    bool is_cubic() const {
        for (Vertex v = 0; v < order(); ++v)
            if (degree(v) != 3)
                return false;
        return true;
    }

    bool adjacent(Vertex u, Vertex v) const {
        auto row = neighbors(u);
        check(v);
        return std::binary_search(row.begin(), row.end(), v);
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    void check(Vertex v) const {
        if (v >= order())
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(order()) + ")");
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Reusable buffers for radius-bounded BFS. Visited marks are stamped with a
/// generation counter so a query never clears O(n) state.
///
/// One context per caller; not safe to share between threads.
class DistanceQuery {
public:
    explicit DistanceQuery(const Graph& g) : g_(&g), stamp_(g.order(), 0), dist_(g.order(), 0) {}

    /// True iff d_G(u, v) <= radius.
    bool within(Vertex u, Vertex v, std::uint32_t radius) {
        g_->check(u);
        g_->check(v);
        if (u == v)
            return true;
        bool found = false;
        visit(u, radius, [&](Vertex w, std::uint32_t) {
            if (w == v)
                found = true;
            return !found;
        });
        return found;
    }

    /// Vertices at distance <= radius from u (u first), in BFS order.
    std::vector<Vertex> ball(Vertex u, std::uint32_t radius) {
        std::vector<Vertex> out;
        visit(u, radius, [&](Vertex w, std::uint32_t) {
            out.push_back(w);
            return true;
        });
        return out;
    }

    /// Calls fn(w, dist) for every w with d(u, w) <= radius in BFS order; fn
    /// returns false to stop early.
    template <class Fn>
    void visit(Vertex u, std::uint32_t radius, Fn&& fn) {
        g_->check(u);
        next_generation();
        queue_.clear();
        queue_.push_back(u);
        stamp_[u] = generation_;
        dist_[u] = 0;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex x = queue_[head];
            if (!fn(x, dist_[x]))
                return;
            if (dist_[x] == radius)
                continue;
            for (Vertex y : g_->neighbors(x)) {
                if (stamp_[y] == generation_)
                    continue;
                stamp_[y] = generation_;
                dist_[y] = dist_[x] + 1;
                queue_.push_back(y);
            }
        }
    }

    const Graph& graph() const { return *g_; }

private:
    void next_generation() {
        if (++generation_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            generation_ = 1;
        }
    }

    const Graph* g_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> dist_;
    std::vector<Vertex> queue_;
    std::uint32_t generation_ = 0;
};

inline bool distance_leq(const Graph& g, Vertex u, Vertex v, std::uint32_t d) {
    return DistanceQuery(g).within(u, v, d);
}

inline std::vector<Vertex> neighborhood(const Graph& g, Vertex u) {
    auto row = g.neighbors(u);
    return {row.begin(), row.end()};
}

/// Full single-source BFS; unreachable vertices get kUnreachable.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src) {
    g.check(src);
    std::vector<std::uint32_t> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x))
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

/// Component id per vertex, numbered in order of lowest member.
inline std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count = nullptr) {
    std::vector<std::uint32_t> comp(g.order(), kUnreachable);
    std::uint32_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] != kUnreachable)
            continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (comp[y] == kUnreachable) {
                    comp[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    if (count)
        *count = next;
    return comp;
}

inline bool is_connected(const Graph& g) {
    std::size_t count = 0;
    connected_components(g, &count);
    return count <= 1;
}

/// Largest finite pairwise distance (0 for graphs with < 2 vertices);
/// kUnreachable when disconnected.
inline std::uint32_t diameter(const Graph& g) {
    std::uint32_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto d : bfs_distances(g, v))
            best = std::max(best, d);
    return best;
}

/// BFS visiting order from vertex 0, restarting at the lowest unvisited id for
/// each further component.
inline std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<Vertex> order;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        seen[s] = true;
        std::size_t head = order.size();
        order.push_back(s);
        for (; head < order.size(); ++head)
            for (Vertex y : g.neighbors(order[head]))
                if (!seen[y]) {
                    seen[y] = true;
                    order.push_back(y);
                }
    }
    return order;
}

/// Relabels vertices: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

}  // namespace packcolor
