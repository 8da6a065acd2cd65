#pragma once

// Reference implementations for tests. They only read a graph through
// order() and edges() and share no code with the library's algorithms.

#include "packcolor/packcolor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using packcolor::Edge;
using packcolor::Graph;
using packcolor::PackingSequence;
using packcolor::SColoring;
using packcolor::Vertex;

inline constexpr unsigned kInf = 1u << 20;

using Matrix = std::vector<std::vector<unsigned>>;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges())
        a[u][v] = a[v][u] = true;
    return a;
}

/// Floyd-Warshall.
inline Matrix all_pairs(const Graph& g) {
    const std::size_t n = g.order();
    Matrix d(n, std::vector<unsigned>(n, kInf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// (class, u, v) with u < v for every same-class pair closer than s_i + 1.
inline std::set<std::tuple<unsigned, Vertex, Vertex>> violations(const Graph& g, const SColoring& f) {
    const Matrix d = all_pairs(g);
    std::set<std::tuple<unsigned, Vertex, Vertex>> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (f.classes[u] == f.classes[v] && d[u][v] <= f.seq.at(f.classes[u]))
                out.emplace(f.classes[u], u, v);
    return out;
}

inline bool valid(const Graph& g, const SColoring& f) { return violations(g, f).empty(); }

/// Plain odometer over all k^n assignments.
inline bool colorable_enumerate(const Graph& g, const PackingSequence& seq) {
    const std::size_t n = g.order();
    const unsigned k = static_cast<unsigned>(seq.size());
    const Matrix d = all_pairs(g);
    std::vector<unsigned> c(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                if (c[u] == c[v] && d[u][v] <= seq.values()[c[u]])
                    ok = false;
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return false;
    }
}

/// Id-order backtracking that checks each new vertex against all earlier
/// ones. Same answer as the odometer, fast enough for n <= 12.
inline std::optional<std::vector<unsigned>> colorable(const Graph& g, const PackingSequence& seq) {
    const std::size_t n = g.order();
    const Matrix d = all_pairs(g);
    std::vector<unsigned> c(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == n)
            return true;
        for (unsigned k = 0; k < seq.size(); ++k) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = !(c[u] == k + 1 && d[u][v] <= seq.values()[k]);
            if (!ok)
                continue;
            c[v] = k + 1;
            if (self(self, v + 1))
                return true;
        }
        c[v] = 0;
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    return c;
}

/// max |I1| + |I2| by enumerating all 3^n labelings.
inline std::size_t max_two_independent(const Graph& g) {
    const std::size_t n = g.order();
    const auto edges = g.edges();
    std::vector<int> lab(n, 0);
    std::size_t best = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (lab[u] != 0 && lab[u] == lab[v])
                ok = false;
        if (ok)
            best = std::max<std::size_t>(best, std::count_if(lab.begin(), lab.end(), [](int x) { return x != 0; }));
        std::size_t i = 0;
        while (i < n && ++lab[i] == 3)
            lab[i++] = 0;
        if (i == n)
            return best;
    }
}

/// Brute-force isomorphism over all permutations (n <= 9 or so).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    const auto A = adjacency(a);
    const auto B = adjacency(b);
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!B[p[u]][p[v]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Shortest cycle length, kInf for forests: for each edge, one plus the
/// distance between its ends once it is removed.
inline unsigned girth(const Graph& g) {
    unsigned best = kInf;
    const auto edges = g.edges();
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        std::vector<Edge> rest;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != skip)
                rest.push_back(edges[i]);
        const Matrix d = all_pairs(Graph::from_edges(g.order(), rest));
        const unsigned through = d[edges[skip].first][edges[skip].second];
        if (through < kInf)
            best = std::min(best, through + 1);
    }
    return best;
}

/// Independent graph6 encoder: bit string over the upper triangle by
/// columns, padded to a multiple of six.
inline std::string graph6(const Graph& g) {
    const auto a = adjacency(g);
    std::vector<int> bits;
    for (std::size_t j = 1; j < g.order(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            bits.push_back(a[i][j] ? 1 : 0);
    while (bits.size() % 6)
        bits.push_back(0);
    std::string out(1, static_cast<char>(63 + g.order()));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (int b = 0; b < 6; ++b)
            x = x * 2 + bits[i + b];
        out.push_back(static_cast<char>(63 + x));
    }
    return out;
}

/// Random simple graph with maximum degree <= max_degree, built from
/// std::mt19937 so it is independent of the library's generators.
inline Graph random_graph(std::size_t n, std::uint32_t seed, unsigned max_degree = 3, double density = 0.9) {
    std::mt19937 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<unsigned> deg(n, 0);
    std::vector<Edge> edges;
    std::bernoulli_distribution keep(density);
    for (auto [u, v] : pairs)
        if (deg[u] < max_degree && deg[v] < max_degree && keep(rng)) {
            ++deg[u];
            ++deg[v];
            edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

namespace detail {

/// Canonical upper-triangle bit string, minimized over the permutations that
/// respect an iteratively refined degree partition.
inline std::vector<bool> canonical_form(std::size_t n, const std::vector<std::vector<bool>>& a) {
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::count(a[v].begin(), a[v].end(), true));
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w])
                    sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color)
            break;
        color = next;
    }
    // Positions are filled class by class; within a class every order is tried.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return std::pair(color[x], x) < std::pair(color[y], y); });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && color[order[j]] == color[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<bool> best;
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            std::vector<bool> code;
            for (std::size_t j = 1; j < n; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    code.push_back(a[order[i]][order[j]]);
            if (best.empty() || code < best)
                best = code;
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            self(self, b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

}  // namespace detail

/// All pairwise non-isomorphic graphs on n vertices with maximum degree <= 3,
/// grown one vertex at a time.
inline std::vector<Graph> subcubic_corpus(std::size_t n) {
    std::vector<Graph> level{Graph::from_edges(0, {})};
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::vector<bool>, Graph> next;
        for (const Graph& g : level) {
            const std::size_t m = g.order();
            std::vector<Vertex> open;
            for (Vertex v = 0; v < m; ++v)
                if (g.degree(v) < 3)
                    open.push_back(v);
            for (std::uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
                if (__builtin_popcount(mask) > 3)
                    continue;
                auto edges = g.edges();
                for (std::size_t i = 0; i < open.size(); ++i)
                    if (mask >> i & 1)
                        edges.emplace_back(open[i], static_cast<Vertex>(m));
                Graph h = Graph::from_edges(m + 1, edges);
                next.try_emplace(detail::canonical_form(m + 1, adjacency(h)), h);
            }
        }
        level.clear();
        for (auto& [code, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

/// Every non-decreasing sequence over {1..max_value} of length 1..max_length.
inline std::vector<PackingSequence> sequences(unsigned max_value, unsigned max_length) {
    std::vector<PackingSequence> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned lo) -> void {
        if (!cur.empty())
            out.emplace_back(cur);
        if (cur.size() == max_length)
            return;
        for (unsigned v = lo; v <= max_value; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Random permutation of 0..n-1 from std::mt19937.
inline std::vector<Vertex> permutation(std::size_t n, std::uint32_t seed) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
