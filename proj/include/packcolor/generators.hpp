#pragma once

#include "packcolor/graph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace packcolor {

/// Seeded 64-bit engine with a portable bounded draw; std::uniform_int_distribution
/// is implementation-defined, so it is avoided to keep corpora identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("Rng::below(0)");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram i+5 - (i+2)%5+5.
inline Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, edges);
}

inline Graph cycle(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

/// C_n x K2: outer cycle 0..n-1, inner cycle n..2n-1, rungs i - i+n.
inline Graph prism(std::size_t n) {
    if (n < 3)
        throw std::invalid_argument("prism needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        const auto j = static_cast<Vertex>((i + 1) % n);
        edges.emplace_back(i, j);
        edges.emplace_back(i + n, j + n);
        edges.emplace_back(i, i + n);
    }
    return Graph::from_edges(2 * n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph hypercube(unsigned dim) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (unsigned b = 0; b < dim; ++b)
            if (Vertex w = v ^ (1u << b); v < w)
                edges.emplace_back(v, w);
    return Graph::from_edges(n, edges);
}

inline Graph empty_graph(std::size_t n) { return Graph::from_edges(n, std::span<const Edge>{}); }

/// Connected simple cubic graph from the pairing model: 3n points are matched
/// uniformly and the result is rejected if it has a loop, a repeated edge or
/// more than one component. After 10,000 rejections the stream is reseeded.
inline Graph random_cubic(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic needs even n >= 4, got " + std::to_string(n));
    constexpr int kRetryCap = 10'000;
    for (std::uint64_t reseed = 0;; ++reseed) {
        Rng rng(reseed == 0 ? seed : mix_seed(seed, reseed));
        for (int attempt = 0; attempt < kRetryCap; ++attempt) {
            std::vector<Vertex> points;
            points.reserve(3 * n);
            for (Vertex v = 0; v < n; ++v)
                points.insert(points.end(), {v, v, v});
            rng.shuffle(points);
            std::vector<Edge> edges;
            bool simple = true;
            std::vector<std::vector<Vertex>> seen(n);
            for (std::size_t i = 0; i < points.size() && simple; i += 2) {
                Vertex u = points[i];
                Vertex v = points[i + 1];
                if (u == v) {
                    simple = false;
                    break;
                }
                for (Vertex w : seen[u])
                    if (w == v)
                        simple = false;
                seen[u].push_back(v);
                seen[v].push_back(u);
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
            if (!simple)
                continue;
            Graph g = Graph::from_edges(n, edges);
            if (is_connected(g))
                return g;
        }
    }
}

/// Random subcubic graph: a random cubic graph on n vertices with each edge
/// independently dropped with probability drop_per_mille / 1000. May be
/// disconnected.
inline Graph random_subcubic(std::size_t n, std::uint64_t seed, unsigned drop_per_mille = 150) {
    Graph host = random_cubic(n, seed);
    Rng rng(mix_seed(seed, 0xd0d0));
    std::vector<Edge> kept;
    for (auto e : host.edges())
        if (rng.below(1000) >= drop_per_mille)
            kept.push_back(e);
    return Graph::from_edges(n, kept);
}

/// Guest graph embedded into a host by an injective vertex map.
struct Embedding {
    Graph host;
    std::vector<Vertex> image;
};

/// Embeds a subcubic graph as an induced subgraph of a cubic host. Each round
/// takes two disjoint copies of the current graph and joins the two copies of
/// every vertex of degree < 3; every positive deficiency drops by exactly one,
/// so at most three rounds are needed and the host has at most 8n vertices.
/// The guest lives in the first copy, so the image is the identity.
inline Embedding cubic_complete(const Graph& g) {
    if (!g.is_subcubic())
        throw std::invalid_argument("cubic_complete: input has a vertex of degree > 3");
    Graph current = g;
    while (!current.is_cubic()) {
        const auto n = static_cast<Vertex>(current.order());
        std::vector<Edge> edges;
        for (auto [u, v] : current.edges()) {
            edges.emplace_back(u, v);
            edges.emplace_back(u + n, v + n);
        }
        for (Vertex v = 0; v < n; ++v)
            if (current.degree(v) < 3)
                edges.emplace_back(v, v + n);
        current = Graph::from_edges(2 * static_cast<std::size_t>(n), edges);
    }
    std::vector<Vertex> image(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        image[v] = v;
    return {std::move(current), std::move(image)};
}

}  // namespace packcolor
