#pragma once

#include "packcolor/diagnostic.hpp"
#include "packcolor/graph.hpp"

#include "json.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace packcolor {

/// Which part of the partition a vertex belongs to. I1 and I2 are the two
/// disjoint independent sets ("black" vertices); everything else is red.
enum class Side : std::uint8_t { I1 = 0, I2 = 1, Red = 2 };

inline const char* to_string(Side s) {
    switch (s) {
        case Side::I1: return "I1";
        case Side::I2: return "I2";
        case Side::Red: return "RED";
    }
    return "?";
}

inline bool is_black(Side s) { return s != Side::Red; }
inline Side opposite(Side s) { return s == Side::I1 ? Side::I2 : Side::I1; }

/// Lexicographic potential: black-set size first, then minus the number of
/// red components. Every committed repair raises it strictly.
struct Potential {
    long size = 0;
    long neg_components = 0;

    friend auto operator<=>(const Potential&, const Potential&) = default;

    nlohmann::json to_json() const { return nlohmann::json::array({size, neg_components}); }
};

/// The partition (I1, I2, red) of a graph with per-vertex neighbor counts by
/// side. I1 and I2 stay independent across every committed move.
class PartitionState {
public:
    explicit PartitionState(const Graph& g)
        : g_(&g), side_(g.order(), Side::Red), counts_(g.order()), stamp_(g.order(), 0) {
        for (Vertex v = 0; v < g.order(); ++v)
            counts_[v] = {0, 0, static_cast<std::uint8_t>(g.degree(v))};
    }

    const Graph& graph() const { return *g_; }
    std::size_t order() const { return side_.size(); }

    Side side(Vertex v) const { return side_[v]; }
    bool red(Vertex v) const { return side_[v] == Side::Red; }

    /// Number of neighbors of v currently on side s.
    unsigned count(Vertex v, Side s) const { return counts_[v][static_cast<int>(s)]; }

    void set_side(Vertex v, Side s) {
        const Side old = side_[v];
        if (old == s)
            return;
        side_[v] = s;
        black_ += static_cast<long>(is_black(s)) - static_cast<long>(is_black(old));
        for (Vertex w : g_->neighbors(v)) {
            --counts_[w][static_cast<int>(old)];
            ++counts_[w][static_cast<int>(s)];
        }
    }

    long black_size() const { return black_; }

    std::vector<Vertex> members(Side s) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < order(); ++v)
            if (side_[v] == s)
                out.push_back(v);
        return out;
    }

    /// v may sit on black side s without an edge inside s.
    bool fits(Vertex v, Side s) const { return s == Side::Red || count(v, s) == 0; }

    bool independent() const {
        for (Vertex v = 0; v < order(); ++v)
            if (!fits(v, side_[v]))
                return false;
        return true;
    }

    /// Cached counts agree with a recomputation from scratch.
    bool consistent() const {
        long black = 0;
        for (Vertex v = 0; v < order(); ++v) {
            std::array<unsigned, 3> c{0, 0, 0};
            for (Vertex w : g_->neighbors(v))
                ++c[static_cast<int>(side_[w])];
            for (int s = 0; s < 3; ++s)
                if (c[s] != counts_[v][s])
                    return false;
            black += is_black(side_[v]);
        }
        return black == black_;
    }

    /// Red component id per vertex (kUnreachable for black vertices).
    std::vector<std::uint32_t> red_components(std::size_t* count_out = nullptr) const {
        std::vector<std::uint32_t> comp(order(), kUnreachable);
        std::uint32_t next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < order(); ++s) {
            if (!red(s) || comp[s] != kUnreachable)
                continue;
            comp[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g_->neighbors(x))
                    if (red(y) && comp[y] == kUnreachable) {
                        comp[y] = next;
                        stack.push_back(y);
                    }
            }
            ++next;
        }
        if (count_out)
            *count_out = next;
        return comp;
    }

    Potential potential() const {
        std::size_t comps = 0;
        red_components(&comps);
        return {black_, -static_cast<long>(comps)};
    }

    /// Number of distinct red components meeting `seeds` (black seeds are
    /// ignored). Uses the stamp buffer, so it is not reentrant.
    long red_components_touching(std::span<const Vertex> seeds) const {
        if (++generation_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            generation_ = 1;
        }
        long found = 0;
        for (Vertex s : seeds) {
            if (!red(s) || stamp_[s] == generation_)
                continue;
            ++found;
            stamp_[s] = generation_;
            scratch_.assign(1, s);
            while (!scratch_.empty()) {
                Vertex x = scratch_.back();
                scratch_.pop_back();
                for (Vertex y : g_->neighbors(x))
                    if (red(y) && stamp_[y] != generation_) {
                        stamp_[y] = generation_;
                        scratch_.push_back(y);
                    }
            }
        }
        return found;
    }

    nlohmann::json to_json() const {
        auto list = [](const std::vector<Vertex>& vs) { return nlohmann::json(vs); };
        return {{"n", order()},
                {"I1", list(members(Side::I1))},
                {"I2", list(members(Side::I2))},
                {"red", list(members(Side::Red))},
                {"potential", potential().to_json()}};
    }

private:
    const Graph* g_;
    std::vector<Side> side_;
    std::vector<std::array<std::uint8_t, 3>> counts_;
    long black_ = 0;
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::vector<Vertex> scratch_;
    mutable std::uint32_t generation_ = 0;
};

struct Change {
    Vertex v;
    Side from;
    Side to;

    friend bool operator==(const Change&, const Change&) = default;
};

enum class Trigger { FreeAdd, P2Merge, P2Shift, Local, CycleSwap, Rotation };

inline const char* to_string(Trigger t) {
    switch (t) {
        case Trigger::FreeAdd: return "FREE_ADD";
        case Trigger::P2Merge: return "P2_MERGE";
        case Trigger::P2Shift: return "P2_SHIFT";
        case Trigger::Local: return "LOCAL";
        case Trigger::CycleSwap: return "CYCLE_SWAP";
        case Trigger::Rotation: return "ROTATION";
    }
    return "?";
}

/// One reassignment step. Neutral steps (P2_SHIFT, ROTATION) only occur
/// inside a composite whose final potential is strictly higher.
struct RepairMove {
    std::vector<Change> changes;
    Trigger trigger = Trigger::Local;
    Potential phi_before;
    Potential phi_after;

    nlohmann::json to_json() const {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : changes)
            list.push_back({{"v", c.v}, {"from", to_string(c.from)}, {"to", to_string(c.to)}});
        return {{"trigger", to_string(trigger)},
                {"changes", std::move(list)},
                {"phi_before", phi_before.to_json()},
                {"phi_after", phi_after.to_json()}};
    }
};

/// Steps committed atomically.
struct Composite {
    std::vector<RepairMove> steps;

    Trigger trigger() const { return steps.empty() ? Trigger::Local : steps.back().trigger; }
    Potential phi_before() const { return steps.front().phi_before; }
    Potential phi_after() const { return steps.back().phi_after; }
};

inline void apply_changes(PartitionState& s, std::span<const Change> changes) {
    for (const auto& c : changes)
        s.set_side(c.v, c.to);
}

inline void revert_changes(PartitionState& s, std::span<const Change> changes) {
    for (auto it = changes.rbegin(); it != changes.rend(); ++it)
        s.set_side(it->v, it->from);
}

/// True iff every black vertex touched by `changes` still fits its side.
inline bool changes_keep_independence(const PartitionState& s, std::span<const Change> changes) {
    for (const auto& c : changes) {
        if (!s.fits(c.v, s.side(c.v)))
            return false;
        for (Vertex w : s.graph().neighbors(c.v))
            if (!s.fits(w, s.side(w)))
                return false;
    }
    return true;
}

/// Applies `changes` to s (must currently be in the pre-state) and returns a
/// fully annotated move; s is left in the post-state.
inline RepairMove make_step(PartitionState& s, std::vector<Change> changes, Trigger trigger) {
    RepairMove m;
    m.trigger = trigger;
    m.phi_before = s.potential();
    apply_changes(s, changes);
    m.phi_after = s.potential();
    m.changes = std::move(changes);
    return m;
}

}  // namespace packcolor
