#pragma once

#include "packcolor/graph.hpp"

#include <vector>

namespace packcolor {

/// Where a vertex of D(G) comes from: an original vertex of G, or the midpoint
/// inserted on the base edge (a, b).
struct Origin {
    bool original = true;
    Vertex a = 0;
    Vertex b = 0;

    static Origin vertex(Vertex v) { return {true, v, v}; }
    static Origin midpoint(Vertex u, Vertex v) { return {false, u, v}; }

    friend bool operator==(const Origin&, const Origin&) = default;
};

struct SubdividedGraph {
    Graph base;
    Graph graph;
    std::vector<Origin> origin;
};

/// 1-subdivision: every base edge uv becomes the path u - m - v. Original
/// vertices keep their ids; the midpoint of the i-th edge (lexicographic
/// order) gets id n + i.
inline SubdividedGraph subdivide(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    auto base_edges = g.edges();
    std::vector<Edge> edges;
    edges.reserve(2 * base_edges.size());
    std::vector<Origin> origin;
    origin.reserve(n + base_edges.size());
    for (Vertex v = 0; v < n; ++v)
        origin.push_back(Origin::vertex(v));
    for (std::size_t i = 0; i < base_edges.size(); ++i) {
        auto [u, v] = base_edges[i];
        const Vertex mid = n + static_cast<Vertex>(i);
        edges.emplace_back(u, mid);
        edges.emplace_back(v, mid);
        origin.push_back(Origin::midpoint(u, v));
    }
    return {g, Graph::from_edges(n + base_edges.size(), edges), std::move(origin)};
}

}  // namespace packcolor
