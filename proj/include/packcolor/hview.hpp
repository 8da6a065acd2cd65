#pragma once

#include "packcolor/graph.hpp"
#include "packcolor/partition.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace packcolor {

enum class Shape { Tree, EvenCycle, OddCycle, Other };

inline const char* to_string(Shape s) {
    switch (s) {
        case Shape::Tree: return "TREE";
        case Shape::EvenCycle: return "EVEN_CYCLE";
        case Shape::OddCycle: return "ODD_CYCLE";
        case Shape::Other: return "OTHER";
    }
    return "?";
}

struct HComponent {
    std::vector<Vertex> vertices;  ///< sorted
    std::size_t edge_count = 0;
    Shape shape = Shape::Tree;
    std::vector<std::pair<Vertex, Vertex>> red_p2s;  ///< red G-edges inside, (lower, higher)
};

/// Graph on the red vertices with an edge for every pair at G-distance <= 2,
/// split into components tagged by shape.
struct HView {
    std::vector<Vertex> vertices;              ///< red vertices, sorted
    std::vector<std::vector<Vertex>> adj;      ///< indexed by G vertex id; sorted; empty for black
    std::vector<std::uint32_t> component_of;   ///< kUnreachable for black
    std::vector<HComponent> components;        ///< ordered by lowest member
    std::size_t edge_count = 0;

    std::size_t degree(Vertex v) const { return adj[v].size(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (Vertex v : vertices)
            d = std::max(d, adj[v].size());
        return d;
    }

    const HComponent& component(Vertex v) const { return components.at(component_of.at(v)); }

    bool adjacent(Vertex u, Vertex v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

    bool has_other() const {
        return std::any_of(components.begin(), components.end(),
                           [](const HComponent& c) { return c.shape == Shape::Other; });
    }
};

inline HView build_h(const PartitionState& s) {
    const Graph& g = s.graph();
    HView h;
    h.adj.resize(g.order());
    h.component_of.assign(g.order(), kUnreachable);
    DistanceQuery query(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!s.red(v))
            continue;
        h.vertices.push_back(v);
        query.visit(v, 2, [&](Vertex w, std::uint32_t) {
            if (w != v && s.red(w))
                h.adj[v].push_back(w);
            return true;
        });
        std::sort(h.adj[v].begin(), h.adj[v].end());
        h.edge_count += h.adj[v].size();
    }
    h.edge_count /= 2;

    std::vector<Vertex> stack;
    for (Vertex root : h.vertices) {
        if (h.component_of[root] != kUnreachable)
            continue;
        const auto id = static_cast<std::uint32_t>(h.components.size());
        HComponent comp;
        h.component_of[root] = id;
        stack.assign(1, root);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.vertices.push_back(x);
            for (Vertex y : h.adj[x])
                if (h.component_of[y] == kUnreachable) {
                    h.component_of[y] = id;
                    stack.push_back(y);
                }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        bool all_degree_two = true;
        for (Vertex x : comp.vertices) {
            comp.edge_count += h.adj[x].size();
            all_degree_two = all_degree_two && h.adj[x].size() == 2;
            for (Vertex y : g.neighbors(x))
                if (x < y && s.red(y))
                    comp.red_p2s.emplace_back(x, y);
        }
        comp.edge_count /= 2;
        const std::size_t k = comp.vertices.size();
        if (comp.edge_count + 1 == k)
            comp.shape = Shape::Tree;
        else if (comp.edge_count == k && all_degree_two)
            comp.shape = k % 2 == 0 ? Shape::EvenCycle : Shape::OddCycle;
        else
            comp.shape = Shape::Other;
        h.components.push_back(std::move(comp));
    }
    return h;
}

/// Cycle order of a cycle component: starts at `start`, then follows the
/// lower-id neighbor of `start` unless `toward` names the other one.
inline std::vector<Vertex> cycle_order(const HView& h, Vertex start, std::optional<Vertex> toward = std::nullopt) {
    std::vector<Vertex> order{start};
    Vertex prev = start;
    Vertex cur = toward ? *toward : h.adj[start].front();
    while (cur != start) {
        order.push_back(cur);
        const auto& nb = h.adj[cur];
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace packcolor
