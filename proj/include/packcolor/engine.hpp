#pragma once

#include "packcolor/diagnostic.hpp"
#include "packcolor/graph.hpp"
#include "packcolor/hview.hpp"
#include "packcolor/partition.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace packcolor {

/// I1 = greedy maximal independent set by ascending id, I2 = the same on
/// G - I1, everything else red.
inline PartitionState init_partition(const Graph& g) {
    PartitionState s(g);
    for (Side side : {Side::I1, Side::I2})
        for (Vertex v = 0; v < g.order(); ++v)
            if (s.red(v) && s.count(v, side) == 0)
                s.set_side(v, side);
    return s;
}

/// Lowest-id red vertex with no neighbor in I1 (tried first) or in I2,
/// moved into that set.
inline std::optional<RepairMove> mv_free_add(PartitionState& s) {
    for (Vertex v = 0; v < s.order(); ++v) {
        if (!s.red(v))
            continue;
        for (Side side : {Side::I1, Side::I2})
            if (s.count(v, side) == 0) {
                RepairMove m = make_step(s, {{v, Side::Red, side}}, Trigger::FreeAdd);
                revert_changes(s, m.changes);
                return m;
            }
    }
    return std::nullopt;
}

namespace detail {

inline std::optional<Vertex> black_connector(const PartitionState& s, Vertex a, Vertex b) {
    for (Vertex w : s.graph().neighbors(a))
        if (!s.red(w) && s.graph().adjacent(w, b))
            return w;
    return std::nullopt;
}

/// Shortest H-path between two distinct red P2s of the same component, as
/// the list of red vertices from an endpoint of one P2 to an endpoint of the
/// other. Empty if no component carries two P2s.
inline std::vector<Vertex> closest_p2_pair_path(const PartitionState& s, const HView& h) {
    std::vector<Vertex> best;
    const std::size_t n = s.order();
    std::vector<std::uint32_t> p2_id(n, kUnreachable);
    for (const auto& comp : h.components) {
        if (comp.red_p2s.size() < 2)
            continue;
        for (std::uint32_t i = 0; i < comp.red_p2s.size(); ++i) {
            p2_id[comp.red_p2s[i].first] = i;
            p2_id[comp.red_p2s[i].second] = i;
        }
        for (std::uint32_t i = 0; i < comp.red_p2s.size(); ++i) {
            // Multi-source BFS from both endpoints of P2 i.
            std::vector<Vertex> parent(n, kUnreachable);
            std::vector<Vertex> queue{comp.red_p2s[i].first, comp.red_p2s[i].second};
            for (Vertex q : queue)
                parent[q] = q;
            std::optional<Vertex> hit;
            for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
                Vertex x = queue[head];
                for (Vertex y : h.adj[x]) {
                    if (parent[y] != kUnreachable)
                        continue;
                    parent[y] = x;
                    if (p2_id[y] != kUnreachable && p2_id[y] != i) {
                        hit = y;
                        break;
                    }
                    queue.push_back(y);
                }
            }
            if (!hit)
                continue;
            std::vector<Vertex> path{*hit};
            while (parent[path.back()] != path.back())
                path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            if (best.empty() || path.size() < best.size())
                best = std::move(path);
        }
        for (const auto& [a, b] : comp.red_p2s)
            p2_id[a] = p2_id[b] = kUnreachable;
        if (!best.empty())
            return best;
    }
    return best;
}

inline Vertex p2_partner(const PartitionState& s, Vertex v) {
    for (Vertex w : s.graph().neighbors(v))
        if (s.red(w))
            return w;
    return kUnreachable;
}

}  // namespace detail

/// Removes a pair of red P2s sharing an H-component: shift the nearer P2
/// one connector at a time toward the other (each shift is potential
/// neutral), then merge two P2s that share a black connector w by taking w
/// out of its set and putting both P2 endpoints at w into it (size + 1).
/// A free addition that opens up along the way ends the composite early.
inline std::optional<Composite> repair_two_p2(const PartitionState& state) {
    const HView h = build_h(state);
    auto path = detail::closest_p2_pair_path(state, h);
    if (path.empty())
        return std::nullopt;
    PartitionState s = state;
    Composite out;
    auto fail = [&](const std::string& why) {
        return Diagnostic("repair_two_p2: " + why,
                          {{"state", s.to_json()}, {"path", path}, {"start", state.to_json()}});
    };
    while (true) {
        if (!out.steps.empty())
            if (auto add = mv_free_add(s)) {
                apply_changes(s, add->changes);
                out.steps.push_back(std::move(*add));
                return out;
            }
        if (path.size() < 2)
            throw fail("degenerate path");
        const Vertex a = path[0];
        const Vertex b = path[1];
        const auto w = detail::black_connector(s, a, b);
        if (!w)
            throw fail("no black connector between " + std::to_string(a) + " and " + std::to_string(b));
        const Side x = s.side(*w);
        if (path.size() == 2) {
            RepairMove m = make_step(s, {{*w, x, Side::Red}, {a, Side::Red, x}, {b, Side::Red, x}}, Trigger::P2Merge);
            if (!changes_keep_independence(s, m.changes))
                throw fail("merge breaks independence");
            out.steps.push_back(std::move(m));
            return out;
        }
        RepairMove m = make_step(s, {{*w, x, Side::Red}, {a, Side::Red, x}}, Trigger::P2Shift);
        if (!changes_keep_independence(s, m.changes))
            throw fail("shift breaks independence");
        out.steps.push_back(std::move(m));
        // w now pairs with path[1] as a red P2, one step closer.
        path.erase(path.begin());
        if (detail::p2_partner(s, path[0]) == kUnreachable)
            throw fail("shift did not create a P2");
    }
}

namespace detail {

/// Exhaustive search over reassignments of a ball around a center.
/// Iterative deepening on the number of changed vertices; within one depth
/// the ball is scanned in id order, each vertex either kept or moved to
/// another side (I1, I2, RED in that order). Partial assignments that put two
/// adjacent settled vertices in the same set are cut.
class BallSearch {
public:
    BallSearch(PartitionState& s, Vertex center, unsigned radius)
        : s_(s), pos_(s.order(), -1) {
        DistanceQuery query(s.graph());
        ball_ = query.ball(center, radius);
        std::sort(ball_.begin(), ball_.end());
        for (std::size_t i = 0; i < ball_.size(); ++i)
            pos_[ball_[i]] = static_cast<int>(i);
        red_suffix_.assign(ball_.size() + 1, 0);
        for (std::size_t i = ball_.size(); i-- > 0;)
            red_suffix_[i] = red_suffix_[i + 1] + (s.red(ball_[i]) ? 1 : 0);
    }

    std::optional<std::vector<Change>> run(unsigned max_changes) {
        for (unsigned budget = 1; budget <= max_changes && budget <= ball_.size(); ++budget) {
            budget_ = budget;
            changes_.clear();
            if (descend(0, 0))
                return changes_;
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool settled_or_fixed(Vertex w, std::size_t i) const { return pos_[w] < 0 || pos_[w] < static_cast<int>(i); }

    bool improving(long size_delta) {
        if (size_delta > 0)
            return true;
        if (size_delta < 0)
            return false;
        // Equal size: the red component count must drop.
        std::vector<Vertex> seeds;
        for (const auto& c : changes_) {
            seeds.push_back(c.v);
            for (Vertex w : s_.graph().neighbors(c.v))
                seeds.push_back(w);
        }
        const long after = s_.red_components_touching(seeds);
        revert_changes(s_, changes_);
        const long before = s_.red_components_touching(seeds);
        apply_changes(s_, changes_);
        return after < before;
    }

    bool descend(std::size_t i, long size_delta) {
        ++nodes_;
        const unsigned used = static_cast<unsigned>(changes_.size());
        if (used == budget_) {
            for (const auto& c : changes_)
                if (!s_.fits(c.v, c.to))
                    return false;
            return improving(size_delta);
        }
        const std::size_t left = ball_.size() - i;
        if (used + left < budget_)
            return false;
        if (size_delta + std::min<long>(budget_ - used, red_suffix_[i]) < 0)
            return false;
        const Vertex v = ball_[i];
        const Side cur = s_.side(v);
        if (cur == Side::Red || s_.count(v, cur) == 0)
            if (descend(i + 1, size_delta))
                return true;
        for (Side to : {Side::I1, Side::I2, Side::Red}) {
            if (to == cur)
                continue;
            if (is_black(to)) {
                bool blocked = false;
                for (Vertex w : s_.graph().neighbors(v))
                    if (s_.side(w) == to && settled_or_fixed(w, i)) {
                        blocked = true;
                        break;
                    }
                if (blocked)
                    continue;
            }
            const long delta = static_cast<long>(is_black(to)) - static_cast<long>(is_black(cur));
            s_.set_side(v, to);
            changes_.push_back({v, cur, to});
            if (descend(i + 1, size_delta + delta))
                return true;
            changes_.pop_back();
            s_.set_side(v, cur);
        }
        return false;
    }

    PartitionState& s_;
    std::vector<Vertex> ball_;
    std::vector<int> pos_;
    std::vector<long> red_suffix_;
    std::vector<Change> changes_;
    unsigned budget_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline constexpr unsigned kLocalRadius = 3;
inline constexpr unsigned kLocalMaxChanges = 6;

/// First reassignment of at most `max_changes` vertices within distance
/// `radius` of `center` that keeps I1 and I2 independent and strictly raises
/// the potential. Smaller moves are found first. The state is unchanged on
/// return.
inline std::optional<RepairMove> local_improve(PartitionState& s, Vertex center, unsigned radius = kLocalRadius,
                                               unsigned max_changes = kLocalMaxChanges,
                                               Trigger tag = Trigger::Local) {
    detail::BallSearch search(s, center, radius);
    auto found = search.run(max_changes);
    if (!found)
        return std::nullopt;
    // The search leaves the found changes applied.
    revert_changes(s, *found);
    RepairMove m = make_step(s, std::move(*found), tag);
    revert_changes(s, m.changes);
    return m;
}

/// Vertices around which the structure of a closed partition departs from
/// what the extremal argument guarantees: an H-component that is not a tree
/// or a cycle, H-degree above 3, a degree-3 H-vertex that is a red P1 or
/// whose P2 partner has H-degree other than 1, three red P1s on one black
/// vertex not forming their own triangle component, a red P1 joined through
/// three black vertices to three other red P1s, and the diagonal pattern of
/// two red P1s across a red P2. Sorted, without duplicates.
inline std::vector<Vertex> detect_structure(const PartitionState& s, const HView& h) {
    const Graph& g = s.graph();
    std::vector<Vertex> centers;
    auto red_p1 = [&](Vertex v) { return s.red(v) && s.count(v, Side::Red) == 0; };

    for (const auto& comp : h.components)
        if (comp.shape == Shape::Other)
            centers.insert(centers.end(), comp.vertices.begin(), comp.vertices.end());

    for (Vertex v : h.vertices) {
        const auto deg = h.degree(v);
        if (deg > 3) {
            centers.push_back(v);
        } else if (deg == 3) {
            const Vertex partner = detail::p2_partner(s, v);
            if (partner == kUnreachable || h.degree(partner) != 1)
                centers.push_back(v);
        }
    }

    for (Vertex b = 0; b < g.order(); ++b) {
        if (s.red(b) || s.count(b, Side::Red) < 3)
            continue;
        Vertex first_red = kUnreachable;
        for (Vertex t : g.neighbors(b))
            if (s.red(t) && first_red == kUnreachable)
                first_red = t;
        if (h.component(first_red).vertices.size() != 3)
            centers.push_back(b);
    }

    for (Vertex u = 0; u < g.order(); ++u) {
        if (!red_p1(u) || g.degree(u) != 3)
            continue;
        bool all_joined = true;
        for (Vertex b : g.neighbors(u)) {
            bool joined = false;
            for (Vertex t : g.neighbors(b))
                joined = joined || (t != u && red_p1(t));
            all_joined = all_joined && joined;
        }
        if (all_joined)
            centers.push_back(u);
    }

    for (const auto& comp : h.components)
        for (auto [p, q] : comp.red_p2s)
            for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}})
                for (Vertex a : g.neighbors(x)) {
                    if (s.red(a))
                        continue;
                    for (Vertex b : g.neighbors(y)) {
                        if (s.red(b) || s.side(b) == s.side(a))
                            continue;
                        bool hit = false;
                        for (Vertex t1 : g.neighbors(a))
                            for (Vertex t2 : g.neighbors(b))
                                hit = hit || (t1 != x && t2 != y && t1 != t2 && red_p1(t1) && red_p1(t2));
                        if (hit)
                            centers.push_back(x);
                    }
                }

    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    return centers;
}

struct EngineStats {
    std::size_t composites = 0;
    std::size_t free_adds = 0;
    std::size_t p2_repairs = 0;
    std::size_t local_moves = 0;
    std::size_t conflict_repairs = 0;
    std::uint64_t search_nodes = 0;
};

/// Owns a partition of one graph and commits composites to it, auditing
/// independence, strict potential increase and the (n+1)^2 composite bound.
class Engine {
public:
    using TraceSink = std::function<void(const nlohmann::json&)>;

    explicit Engine(const Graph& g, TraceSink trace = {}) : state_(init_partition(g)), trace_(std::move(trace)) {}

    const PartitionState& state() const { return state_; }
    PartitionState& scratch_state() { return state_; }
    const EngineStats& stats() const { return stats_; }

    std::size_t composite_bound() const { return (state_.order() + 1) * (state_.order() + 1); }

    void commit(const Composite& c) {
        if (c.steps.empty())
            throw Diagnostic("empty composite", {{"state", state_.to_json()}});
        const Potential before = state_.potential();
        for (const auto& step : c.steps) {
            for (const auto& ch : step.changes)
                if (state_.side(ch.v) != ch.from)
                    throw Diagnostic("composite does not match state", {{"state", state_.to_json()}});
            apply_changes(state_, step.changes);
            if (!changes_keep_independence(state_, step.changes))
                throw Diagnostic("committed step breaks independence",
                                 {{"state", state_.to_json()}, {"step", step.to_json()}});
        }
        const Potential after = state_.potential();
        if (!(after > before))
            throw Diagnostic("potential did not increase",
                             {{"state", state_.to_json()}, {"before", before.to_json()}, {"after", after.to_json()}});
        if (++stats_.composites > composite_bound())
            throw Diagnostic("composite bound exceeded", {{"state", state_.to_json()}});
        if (trace_) {
            nlohmann::json changes = nlohmann::json::array();
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& step : c.steps) {
                steps.push_back(to_string(step.trigger));
                for (const auto& ch : step.changes)
                    changes.push_back({{"v", ch.v}, {"from", to_string(ch.from)}, {"to", to_string(ch.to)}});
            }
            trace_({{"trigger", to_string(c.trigger())},
                    {"steps", std::move(steps)},
                    {"changes", std::move(changes)},
                    {"phi_before", before.to_json()},
                    {"phi_after", after.to_json()}});
        }
    }

    void commit(const RepairMove& m) { commit(Composite{{m}}); }

    /// Runs local_improve at each center in order and commits the first hit.
    bool improve_around(std::span<const Vertex> centers, Trigger tag = Trigger::Local) {
        for (Vertex c : centers) {
            detail::BallSearch search(state_, c, kLocalRadius);
            auto found = search.run(kLocalMaxChanges);
            stats_.search_nodes += search.nodes();
            if (!found)
                continue;
            revert_changes(state_, *found);
            RepairMove m = make_step(state_, std::move(*found), tag);
            revert_changes(state_, m.changes);
            commit(m);
            ++stats_.local_moves;
            return true;
        }
        return false;
    }

    /// Closure under free additions, two-P2 repairs and structure-driven local
    /// improvements. Returns the number of composites committed.
    std::size_t stabilize() {
        const std::size_t start = stats_.composites;
        while (true) {
            if (auto m = mv_free_add(state_)) {
                commit(*m);
                ++stats_.free_adds;
                continue;
            }
            if (auto c = repair_two_p2(state_)) {
                commit(*c);
                ++stats_.p2_repairs;
                continue;
            }
            const HView h = build_h(state_);
            const auto centers = detect_structure(state_, h);
            if (!centers.empty() && improve_around(centers))
                continue;
            break;
        }
        return stats_.composites - start;
    }

    void note_conflict_repair() { ++stats_.conflict_repairs; }
    void add_search_nodes(std::uint64_t n) { stats_.search_nodes += n; }

private:
    PartitionState state_;
    TraceSink trace_;
    EngineStats stats_;
};

}  // namespace packcolor
