#pragma once

#include "packcolor/graph.hpp"
#include "packcolor/subdivision.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace packcolor {

/// Non-decreasing sequence (s_1, ..., s_k) of positive distance parameters.
/// Class i requires pairwise distance >= s_i + 1.
class PackingSequence {
public:
    PackingSequence() = default;

    explicit PackingSequence(std::vector<unsigned> s) : s_(std::move(s)) {
        if (s_.empty())
            throw std::invalid_argument("packing sequence must be non-empty");
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] == 0)
                throw std::invalid_argument("packing sequence entries must be positive");
            if (i > 0 && s_[i] < s_[i - 1])
                throw std::invalid_argument("packing sequence must be non-decreasing");
        }
    }

    PackingSequence(std::initializer_list<unsigned> s) : PackingSequence(std::vector<unsigned>(s)) {}

    /// (1, 2, ..., k)
    static PackingSequence prefix(unsigned k) {
        std::vector<unsigned> s(k);
        for (unsigned i = 0; i < k; ++i)
            s[i] = i + 1;
        return PackingSequence(std::move(s));
    }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    /// Distance parameter of 1-based class i.
    unsigned at(std::size_t cls) const { return s_.at(cls - 1); }
    const std::vector<unsigned>& values() const { return s_; }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < s_.size(); ++i)
            out += (i ? "," : "") + std::to_string(s_[i]);
        return out + ")";
    }

    friend bool operator==(const PackingSequence&, const PackingSequence&) = default;

private:
    std::vector<unsigned> s_;
};

/// Sequence (1,1,2,2,3); classes 1..5 carry the labels 1a, 1b, 2a, 2b, 3.
inline PackingSequence five_class_sequence() { return {1, 1, 2, 2, 3}; }

/// Packing S-coloring: total map vertex -> 1-based class index.
struct SColoring {
    PackingSequence seq;
    std::vector<unsigned> classes;

    /// Throws if the assignment is partial or has a class outside 1..k.
    void check_total(std::size_t n) const {
        if (classes.size() != n)
            throw std::invalid_argument("coloring covers " + std::to_string(classes.size()) + " of " +
                                        std::to_string(n) + " vertices");
        for (std::size_t v = 0; v < classes.size(); ++v)
            if (classes[v] < 1 || classes[v] > seq.size())
                throw std::invalid_argument("vertex " + std::to_string(v) + " has class " +
                                            std::to_string(classes[v]) + " outside 1.." +
                                            std::to_string(seq.size()));
    }

    std::size_t class_size(unsigned cls) const {
        return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), cls));
    }
};

struct Violation {
    unsigned cls;
    Vertex u;
    Vertex v;
    unsigned distance;  ///< actual d(u, v)
    unsigned required;  ///< s_cls + 1

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::vector<Violation> of_class(unsigned cls) const {
        std::vector<Violation> out;
        for (const auto& v : violations)
            if (v.cls == cls)
                out.push_back(v);
        return out;
    }
};

/// Lists every same-class pair {u, v} (u < v) at distance <= s_i, using a BFS
/// of radius s_i from each vertex of class i. Sorted by (class, u, v).
inline ViolationReport verify(const Graph& g, const SColoring& f) {
    f.check_total(g.order());
    ViolationReport report;
    DistanceQuery query(g);
    for (Vertex u = 0; u < g.order(); ++u) {
        const unsigned cls = f.classes[u];
        const unsigned s = f.seq.at(cls);
        query.visit(u, s, [&](Vertex w, std::uint32_t d) {
            if (w > u && f.classes[w] == cls)
                report.violations.push_back({cls, u, w, d, s + 1});
            return true;
        });
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

/// True iff, after sorting, stronger_i >= weaker_i for every i: then any
/// assignment valid under `stronger` is valid under `weaker`.
inline bool weakening_implies(const PackingSequence& stronger, const PackingSequence& weaker) {
    if (stronger.size() != weaker.size())
        throw std::invalid_argument("weakening_implies: length mismatch " + stronger.to_string() + " vs " +
                                    weaker.to_string());
    auto a = stronger.values();
    auto b = weaker.values();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i])
            return false;
    return true;
}

/// Transfers a packing (s_1..s_k)-coloring of G to a packing
/// (1, 2s_1+1, ..., 2s_k+1)-coloring of D(G): midpoints form class 1 and an
/// original vertex of class i moves to class i+1. Distances between original
/// vertices double in D(G), so d >= s_i + 1 becomes d >= 2s_i + 2.
inline SColoring lift(const Graph& g, const SColoring& f, const SubdividedGraph& sub) {
    if (!(sub.base == g))
        throw std::invalid_argument("lift: subdivision was not built from this graph");
    if (auto report = verify(g, f); !report.ok())
        throw std::invalid_argument("lift: input coloring has " + std::to_string(report.violations.size()) +
                                    " violations");
    std::vector<unsigned> s{1};
    for (unsigned x : f.seq.values())
        s.push_back(2 * x + 1);
    SColoring out{PackingSequence(std::move(s)), std::vector<unsigned>(sub.graph.order(), 1)};
    for (Vertex v = 0; v < sub.graph.order(); ++v)
        if (sub.origin[v].original)
            out.classes[v] = f.classes[sub.origin[v].a] + 1;
    return out;
}

}  // namespace packcolor
