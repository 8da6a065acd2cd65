#pragma once

#include "packcolor/diagnostic.hpp"
#include "packcolor/engine.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph.hpp"
#include "packcolor/hview.hpp"
#include "packcolor/packing.hpp"
#include "packcolor/partition.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace packcolor {

enum class HColor : std::uint8_t { None = 0, A, B, C };

/// Proper coloring of H with A/B everywhere and C exactly once on each odd
/// cycle component.
struct HColoring {
    std::vector<HColor> color;  ///< indexed by G vertex id; None for black

    HColor operator[](Vertex v) const { return color[v]; }
};

/// Trees and even cycles: A on the lowest id of the component, then
/// alternate. Odd cycles: one C, then alternate A/B around the cycle starting
/// with A next to C. If the cycle carries a red P2 (p, q), p < q, the C goes
/// on p's other cycle neighbor; otherwise on the lowest-id vertex.
inline HColoring color_h(const PartitionState& s, const HView& h) {
    HColoring hc{std::vector<HColor>(s.order(), HColor::None)};
    for (const auto& comp : h.components) {
        switch (comp.shape) {
            case Shape::Other:
                throw Diagnostic("color_h: H component is neither a tree nor a cycle",
                                 {{"state", s.to_json()}, {"component", comp.vertices}});
            case Shape::Tree:
            case Shape::EvenCycle: {
                std::vector<Vertex> queue{comp.vertices.front()};
                hc.color[queue[0]] = HColor::A;
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    const Vertex x = queue[head];
                    for (Vertex y : h.adj[x])
                        if (hc.color[y] == HColor::None) {
                            hc.color[y] = hc.color[x] == HColor::A ? HColor::B : HColor::A;
                            queue.push_back(y);
                        }
                }
                break;
            }
            case Shape::OddCycle: {
                Vertex c_vertex = comp.vertices.front();
                if (!comp.red_p2s.empty()) {
                    const auto [p, q] = comp.red_p2s.front();
                    c_vertex = h.adj[p][0] == q ? h.adj[p][1] : h.adj[p][0];
                }
                const auto order = cycle_order(h, c_vertex);
                hc.color[c_vertex] = HColor::C;
                for (std::size_t i = 1; i < order.size(); ++i)
                    hc.color[order[i]] = i % 2 == 1 ? HColor::A : HColor::B;
                break;
            }
        }
    }
    return hc;
}

/// I1 -> class 1 (1a), I2 -> 2 (1b), A -> 3 (2a), B -> 4 (2b), C -> 5 (3).
inline SColoring assemble(const PartitionState& s, const HColoring& hc) {
    SColoring f{five_class_sequence(), std::vector<unsigned>(s.order(), 0)};
    for (Vertex v = 0; v < s.order(); ++v) {
        switch (s.side(v)) {
            case Side::I1: f.classes[v] = 1; break;
            case Side::I2: f.classes[v] = 2; break;
            case Side::Red:
                switch (hc[v]) {
                    case HColor::A: f.classes[v] = 3; break;
                    case HColor::B: f.classes[v] = 4; break;
                    case HColor::C: f.classes[v] = 5; break;
                    case HColor::None:
                        throw Diagnostic("assemble: red vertex without H color", {{"vertex", v}});
                }
                break;
        }
    }
    return f;
}

/// Lowest (u, v), u < v, of class-5 vertices with d_G(u, v) <= 3.
inline std::optional<std::pair<Vertex, Vertex>> find_33_conflict(const Graph& g, const SColoring& f) {
    DistanceQuery query(g);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (f.classes[u] != 5)
            continue;
        std::optional<Vertex> best;
        query.visit(u, 3, [&](Vertex w, std::uint32_t) {
            if (w > u && f.classes[w] == 5 && (!best || w < *best))
                best = w;
            return true;
        });
        if (best)
            return std::pair{u, *best};
    }
    return std::nullopt;
}

/// An H-cycle component traced in G: red vertices in cycle order with the
/// black connector of each H-edge between them (lowest id when there is a
/// choice). An H-edge that is a red P2 has no connector. With a P2 the trace
/// starts at its lower endpoint and crosses the P2 first; otherwise it starts
/// at the lowest-id vertex.
struct CycleRealization {
    std::vector<Vertex> sequence;  ///< cyclic G-walk
    std::vector<bool> is_red;

    /// (red, following black) pairs in order: the units a rotation swaps.
    std::vector<std::pair<Vertex, Vertex>> pairs() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            const std::size_t j = (i + 1) % sequence.size();
            if (is_red[i] && !is_red[j])
                out.emplace_back(sequence[i], sequence[j]);
        }
        return out;
    }

    /// Same cycle walked the other way, starting from the P2's other endpoint
    /// (or the same start vertex when there is no P2).
    CycleRealization reversed() const {
        CycleRealization r;
        const std::size_t L = sequence.size();
        const bool p2_first = L >= 2 && is_red[0] && is_red[1];
        const std::size_t start = p2_first ? 1 : 0;
        for (std::size_t k = 0; k < L; ++k) {
            const std::size_t i = (start + L - k) % L;
            r.sequence.push_back(sequence[i]);
            r.is_red.push_back(is_red[i]);
        }
        return r;
    }
};

inline std::optional<CycleRealization> realize_cycle(const PartitionState& s, const HView& h, const HComponent& comp) {
    if (comp.shape != Shape::EvenCycle && comp.shape != Shape::OddCycle)
        return std::nullopt;
    std::vector<Vertex> order;
    if (!comp.red_p2s.empty()) {
        const auto [p, q] = comp.red_p2s.front();
        order = cycle_order(h, p, q);
    } else {
        order = cycle_order(h, comp.vertices.front());
    }
    CycleRealization r;
    const Graph& g = s.graph();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex a = order[i];
        const Vertex b = order[(i + 1) % order.size()];
        r.sequence.push_back(a);
        r.is_red.push_back(true);
        if (g.adjacent(a, b))
            continue;
        std::optional<Vertex> connector;
        for (Vertex w : g.neighbors(a))
            if (!s.red(w) && g.adjacent(w, b) && (!connector || w < *connector))
                connector = w;
        if (!connector)
            return std::nullopt;
        r.sequence.push_back(*connector);
        r.is_red.push_back(false);
    }
    return r;
}

/// Rotation by i: for the first i (red, black) pairs of the realization the
/// red vertex takes the black vertex's set and the black vertex turns red.
/// Not applied to s.
inline RepairMove rotate(const PartitionState& s, const CycleRealization& real, std::size_t i) {
    const auto pairs = real.pairs();
    if (i > pairs.size())
        throw std::invalid_argument("rotate: index beyond cycle length");
    RepairMove m;
    m.trigger = Trigger::Rotation;
    for (std::size_t j = 0; j < i; ++j) {
        const auto [r, b] = pairs[j];
        m.changes.push_back({b, s.side(b), Side::Red});
        m.changes.push_back({r, Side::Red, s.side(b)});
    }
    return m;
}

/// Applies a rotation to s if it touches each vertex once, keeps I1/I2
/// independent and leaves the potential unchanged; returns the annotated
/// step, or nullopt with s untouched.
inline std::optional<RepairMove> apply_rotation(PartitionState& s, RepairMove rot) {
    std::vector<Vertex> touched;
    for (const auto& c : rot.changes)
        touched.push_back(c.v);
    std::sort(touched.begin(), touched.end());
    if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
        return std::nullopt;
    const Potential before = s.potential();
    apply_changes(s, rot.changes);
    if (!changes_keep_independence(s, rot.changes) || s.potential() != before) {
        revert_changes(s, rot.changes);
        return std::nullopt;
    }
    rot.phi_before = rot.phi_after = before;
    return rot;
}

/// Tries the rotations of the realization of each conflict endpoint's H-cycle
/// (identity, prefixes 1..k in both directions) and, after each, a local
/// search centered at every vertex within distance 3 of the conflict. The
/// first composite that strictly raises the potential is returned; the state
/// is unchanged.
inline std::optional<Composite> repair_conflict(PartitionState& state, std::pair<Vertex, Vertex> conflict,
                                                const HView& h, std::uint64_t* search_nodes = nullptr) {
    const Graph& g = state.graph();
    std::vector<Vertex> centers;
    DistanceQuery query(g);
    for (Vertex end : {conflict.first, conflict.second})
        for (Vertex w : query.ball(end, 3))
            centers.push_back(w);
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

    const Potential start = state.potential();
    auto try_centers = [&](PartitionState& s) -> std::optional<RepairMove> {
        for (Vertex c : centers) {
            detail::BallSearch search(s, c, kLocalRadius);
            auto found = search.run(kLocalMaxChanges);
            if (search_nodes)
                *search_nodes += search.nodes();
            if (!found)
                continue;
            revert_changes(s, *found);
            RepairMove m = make_step(s, std::move(*found), Trigger::Local);
            revert_changes(s, m.changes);
            return m;
        }
        return std::nullopt;
    };

    if (auto m = try_centers(state))
        return Composite{{std::move(*m)}};

    std::vector<std::uint32_t> seen_components;
    for (Vertex end : {conflict.first, conflict.second}) {
        const auto cid = h.component_of[end];
        if (std::find(seen_components.begin(), seen_components.end(), cid) != seen_components.end())
            continue;
        seen_components.push_back(cid);
        const auto real = realize_cycle(state, h, h.components[cid]);
        if (!real)
            continue;
        for (const auto& walk : {*real, real->reversed()}) {
            const std::size_t k = walk.pairs().size();
            for (std::size_t i = 1; i <= k; ++i) {
                PartitionState s = state;
                auto rot = apply_rotation(s, rotate(s, walk, i));
                if (!rot)
                    continue;
                if (auto m = try_centers(s)) {
                    apply_changes(s, m->changes);
                    if (s.potential() > start)
                        return Composite{{std::move(*rot), std::move(*m)}};
                }
            }
        }
    }
    return std::nullopt;
}

struct SolveOptions {
    Engine::TraceSink trace;
};

struct SolveStats {
    std::size_t host_order = 0;
    std::size_t composites = 0;
    std::size_t composite_bound = 0;
    std::size_t conflicts_repaired = 0;
    std::size_t rotation_repairs = 0;
    std::size_t rounds = 0;
    std::uint64_t search_nodes = 0;
};

struct SolveResult {
    SColoring coloring;
    SolveStats stats;
};

/// Packing (1,1,2,2,3)-coloring of a subcubic graph. The graph is embedded in
/// a cubic host, the partition is driven to closure, H is colored, and each
/// 3-3 conflict is repaired by a potential-raising composite before
/// recoloring from scratch. The restriction to the input is verified before
/// it is returned; any failure raises Diagnostic.
inline SolveResult solve(const Graph& g, const SolveOptions& options = {}) {
    if (!g.is_subcubic())
        throw std::invalid_argument("solve: input has a vertex of degree > 3");
    const Embedding emb = cubic_complete(g);
    Engine engine(emb.host, options.trace);
    SolveStats stats;
    stats.host_order = emb.host.order();
    SColoring host_coloring;
    while (true) {
        ++stats.rounds;
        engine.stabilize();
        const HView h = build_h(engine.state());
        const HColoring hc = color_h(engine.state(), h);
        host_coloring = assemble(engine.state(), hc);
        const auto conflict = find_33_conflict(emb.host, host_coloring);
        if (!conflict)
            break;
        std::uint64_t nodes = 0;
        auto fix = repair_conflict(engine.scratch_state(), *conflict, h, &nodes);
        engine.add_search_nodes(nodes);
        if (!fix)
            throw Diagnostic("no potential-raising repair for 3-3 conflict",
                             {{"state", engine.state().to_json()},
                              {"conflict", {conflict->first, conflict->second}},
                              {"component_u", h.component(conflict->first).vertices},
                              {"component_v", h.component(conflict->second).vertices}});
        engine.commit(*fix);
        engine.note_conflict_repair();
        if (fix->steps.size() > 1)
            ++stats.rotation_repairs;
    }
    if (auto report = verify(emb.host, host_coloring); !report.ok())
        throw Diagnostic("host coloring failed verification",
                         {{"violations", report.violations.size()}, {"state", engine.state().to_json()}});
    SColoring f{host_coloring.seq, std::vector<unsigned>(g.order(), 0)};
    for (Vertex v = 0; v < g.order(); ++v)
        f.classes[v] = host_coloring.classes[emb.image[v]];
    if (auto report = verify(g, f); !report.ok())
        throw Diagnostic("restricted coloring failed verification",
                         {{"violations", report.violations.size()}, {"state", engine.state().to_json()}});
    stats.composites = engine.stats().composites;
    stats.composite_bound = engine.composite_bound();
    stats.conflicts_repaired = engine.stats().conflict_repairs;
    stats.search_nodes = engine.stats().search_nodes;
    return {std::move(f), stats};
}

}  // namespace packcolor
