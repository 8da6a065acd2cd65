#pragma once

#include "packcolor/graph.hpp"
#include "packcolor/packing.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace packcolor::exact {

enum class Status { Sat, Unsat, Timeout };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Sat: return "SAT";
        case Status::Unsat: return "UNSAT";
        case Status::Timeout: return "TIMEOUT";
    }
    return "?";
}

struct Result {
    Status status = Status::Unsat;
    std::optional<SColoring> coloring;
    std::uint64_t nodes_expanded = 0;
    double elapsed_ms = 0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::chrono::duration<double> cap)
        : start_(Clock::now()), end_(start_ + std::chrono::duration_cast<Clock::duration>(cap)) {}

    bool expired() const { return Clock::now() >= end_; }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_;
    Clock::time_point end_;
};

/// Chronological backtracking with forward checking. Each vertex keeps a
/// bitmask of classes still open to it; placing v in class c closes c for
/// every unplaced vertex within distance s_c of v.
class PackingSearch {
public:
    PackingSearch(const Graph& g, const PackingSequence& seq, const Deadline& deadline)
        : g_(g), seq_(seq), deadline_(deadline), order_(bfs_order(g)), classes_(g.order(), 0) {
        const auto k = seq.size();
        if (k > 31)
            throw std::invalid_argument("exact solver supports at most 31 classes");
        const unsigned radius = seq.values().back();
        DistanceQuery query(g);
        near_.resize(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            query.visit(v, radius, [&](Vertex w, std::uint32_t d) {
                if (w != v)
                    near_[v].push_back({w, d});
                return true;
            });
        open_.assign(g.order(), (1u << k) - 1);
        // Classes sharing a distance parameter are interchangeable; the first
        // vertex only tries the lowest index of each group.
        for (std::size_t c = 1; c <= k; ++c)
            if (c == 1 || seq.at(c) != seq.at(c - 1))
                first_of_group_ |= 1u << (c - 1);
    }

    Status run() {
        if (g_.order() == 0)
            return Status::Sat;
        const auto status = descend(0);
        return status;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<unsigned>& classes() const { return classes_; }

private:
    struct Near {
        Vertex w;
        std::uint32_t d;
    };

    Status descend(std::size_t idx) {
        if (idx == order_.size())
            return Status::Sat;
        ++nodes_;
        if ((nodes_ & 0xfff) == 0 && deadline_.expired())
            return Status::Timeout;
        const Vertex v = order_[idx];
        std::uint32_t candidates = open_[v];
        if (idx == 0)
            candidates &= first_of_group_;
        for (unsigned c = 1; c <= seq_.size(); ++c) {
            const std::uint32_t bit = 1u << (c - 1);
            if (!(candidates & bit))
                continue;
            const std::size_t mark = trail_.size();
            classes_[v] = c;
            bool wiped = false;
            const unsigned s = seq_.at(c);
            for (const auto& [w, d] : near_[v]) {
                if (d > s)
                    break;
                if (classes_[w] == 0 && (open_[w] & bit)) {
                    open_[w] &= ~bit;
                    trail_.push_back(w);
                    if (open_[w] == 0) {
                        wiped = true;
                        break;
                    }
                }
            }
            if (!wiped) {
                const auto status = descend(idx + 1);
                if (status != Status::Unsat)
                    return status;
            }
            while (trail_.size() > mark) {
                open_[trail_.back()] |= bit;
                trail_.pop_back();
            }
            classes_[v] = 0;
        }
        return Status::Unsat;
    }

    const Graph& g_;
    const PackingSequence& seq_;
    const Deadline& deadline_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Near>> near_;
    std::vector<std::uint32_t> open_;
    std::vector<unsigned> classes_;
    std::vector<Vertex> trail_;
    std::uint32_t first_of_group_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides packing S-colorability. Vertices are placed in BFS order from 0,
/// classes in ascending order. A SAT result always carries a coloring that
/// passes verify(); TIMEOUT never implies UNSAT.
inline Result solve(const Graph& g, const PackingSequence& seq,
                    std::chrono::duration<double> time_cap = std::chrono::seconds(60)) {
    if (seq.empty())
        throw std::invalid_argument("exact::solve: empty sequence");
    detail::Deadline deadline(time_cap);
    detail::PackingSearch search(g, seq, deadline);
    Result result;
    result.status = search.run();
    result.nodes_expanded = search.nodes();
    if (result.status == Status::Sat) {
        SColoring f{seq, search.classes()};
        if (!verify(g, f).ok())
            throw std::logic_error("exact::solve produced an invalid coloring");
        result.coloring = std::move(f);
    }
    result.elapsed_ms = deadline.elapsed_ms();
    return result;
}

struct TwoIndependent {
    std::size_t size = 0;
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

inline constexpr std::size_t kMaxTwoIndependentOrder = 24;

/// Maximum |I1| + |I2| over disjoint independent sets, by branch and bound
/// over the trichotomy I1 / I2 / neither for each vertex in id order.
inline TwoIndependent max_two_disjoint_independent(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxTwoIndependentOrder)
        throw std::invalid_argument("max_two_disjoint_independent: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kMaxTwoIndependentOrder));
    // side: 0 none, 1 first set, 2 second set
    std::vector<int> side(n, 0);
    std::vector<int> best_side(n, 0);
    std::size_t best = 0;
    auto can_join = [&](Vertex v, int s) {
        for (Vertex w : g.neighbors(v))
            if (w < v && side[w] == s)
                return false;
        return true;
    };
    auto rec = [&](auto&& self, Vertex v, std::size_t size) -> void {
        if (size + (n - v) <= best)
            return;
        if (v == n) {
            best = size;
            best_side = side;
            return;
        }
        for (int s = 1; s <= 2; ++s) {
            if (s == 2 && size == 0)
                continue;  // the first chosen vertex goes to set 1
            if (!can_join(v, s))
                continue;
            side[v] = s;
            self(self, v + 1, size + 1);
            side[v] = 0;
        }
        self(self, v + 1, size);
    };
    rec(rec, 0, 0);
    TwoIndependent out;
    out.size = best;
    for (Vertex v = 0; v < n; ++v) {
        if (best_side[v] == 1)
            out.first.push_back(v);
        else if (best_side[v] == 2)
            out.second.push_back(v);
    }
    return out;
}

struct ChiResult {
    std::optional<unsigned> value;  ///< empty means UNKNOWN
    std::optional<SColoring> coloring;
};

/// Least k <= k_max with a packing (1, ..., k)-coloring; UNKNOWN when the
/// time cap runs out or k_max is exceeded.
inline ChiResult chi_p(const Graph& g, unsigned k_max, std::chrono::duration<double> time_cap) {
    if (g.order() == 0)
        return {0u, SColoring{PackingSequence{1}, {}}};
    detail::Deadline deadline(time_cap);
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto left = time_cap - std::chrono::duration<double, std::milli>(deadline.elapsed_ms());
        if (left.count() <= 0)
            return {};
        auto r = solve(g, PackingSequence::prefix(k), left);
        if (r.status == Status::Sat)
            return {k, std::move(r.coloring)};
        if (r.status == Status::Timeout)
            return {};
    }
    return {};
}

}  // namespace packcolor::exact
