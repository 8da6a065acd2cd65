#pragma once

#include "packcolor/graph.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace packcolor {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// graph6 for n < 63: one size byte, then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each byte offset by 63.
inline Graph parse_graph6(std::string_view text) {
    text = detail::trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        text.remove_prefix(kGraph6Header.size());
    if (text.empty())
        throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6: non-printable byte " + std::to_string(static_cast<unsigned char>(c)));
    if (text[0] == 126)
        throw ParseError("graph6: graphs with n >= 63 are not supported; use the edge-list format");
    const std::size_t n = static_cast<std::size_t>(text[0] - 63);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() != 1 + body)
        throw ParseError("graph6: expected " + std::to_string(1 + body) + " bytes for n = " + std::to_string(n) +
                         ", got " + std::to_string(text.size()));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if (byte & (1 << (5 - k % 6)))
                edges.emplace_back(i, j);
        }
    // Padding bits must be zero in canonical encodings.
    for (; k < body * 6; ++k)
        if ((text[1 + k / 6] - 63) & (1 << (5 - k % 6)))
            throw ParseError("graph6: nonzero padding bits");
    return Graph::from_edges(n, edges);
}

inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n >= 63)
        throw std::invalid_argument("graph6: graphs with n >= 63 are not supported; use the edge-list format");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// Edge list: "n m" header, then one "u v" pair per line with 0-based ids.
/// Blank lines and '#' comments are ignored.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("edge list line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        std::istringstream fields{std::string(line)};
        long long a = -1;
        long long b = -1;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw fail("expected two integers, got '" + std::string(line) + "'");
        if (a < 0 || b < 0)
            throw fail("negative value");
        if (!have_header) {
            n = static_cast<std::size_t>(a);
            m = static_cast<std::size_t>(b);
            have_header = true;
            continue;
        }
        if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw fail("vertex id out of range for n = " + std::to_string(n));
        if (a == b)
            throw fail("self-loop at vertex " + std::to_string(a));
        for (auto [u, v] : edges)
            if ((u == a && v == b) || (u == b && v == a))
                throw fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header)
        throw ParseError("edge list: missing 'n m' header");
    if (edges.size() != m)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

enum class GraphFormat { Graph6, EdgeList };

/// A '>>graph6<<' header or a non-numeric first character selects graph6.
inline GraphFormat sniff_format(std::string_view text) {
    std::string_view body = detail::trim(text);
    while (!body.empty() && body.front() == '#') {
        auto nl = body.find('\n');
        body = nl == std::string_view::npos ? std::string_view{} : detail::trim(body.substr(nl + 1));
    }
    if (body.empty())
        throw ParseError("cannot detect graph format: empty input");
    if (body.substr(0, kGraph6Header.size()) == kGraph6Header)
        return GraphFormat::Graph6;
    return std::isdigit(static_cast<unsigned char>(body.front())) ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

inline Graph parse_graph(std::string_view text) {
    return sniff_format(text) == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

}  // namespace packcolor
