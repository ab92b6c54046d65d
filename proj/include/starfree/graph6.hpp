#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace starfree {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Decodes one graph6 line (McKay's format). An optional ">>graph6<<" header
/// and surrounding whitespace are accepted; everything else must be exact.
inline Graph parse_graph6(std::string_view text) {
    text = detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside [63, 126]");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: order out of range");
        if (text.size() < 4) throw ParseError("graph6: truncated order header");
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        if (n < 63) throw ParseError("graph6: non-canonical order header");
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " out of range");

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<Bits> rows(n);
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    for (; k < nbytes * 6; ++k) {
        const int byte = text[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_rows(static_cast<int>(n), std::move(rows));
}

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw InvalidArgument("graph6: the null graph K_0 is not encodable here");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Edge-list text: optional first line holding only the order, then one
/// "u v" pair per line (0-indexed). Blank lines and '#' comments are skipped.
/// Without an order line, n is one more than the largest endpoint.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Edge> edges;
    int n = -1, max_vertex = -1;
    bool first = true;
    while (std::getline(in, line)) {
        auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        std::istringstream ls{std::string(body)};
        std::vector<long> nums;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("edge list: not an integer: " + tok);
            }
            if (used != tok.size()) throw ParseError("edge list: not an integer: " + tok);
            nums.push_back(value);
        }
        if (first && nums.size() == 1) {
            n = static_cast<int>(nums[0]);
            if (nums[0] < 0 || nums[0] > kMaxVertices) throw ParseError("edge list: order out of range");
        } else if (nums.size() == 2) {
            if (nums[0] < 0 || nums[1] < 0 || nums[0] >= kMaxVertices || nums[1] >= kMaxVertices)
                throw ParseError("edge list: vertex out of range");
            if (nums[0] == nums[1]) throw ParseError("edge list: loop at " + std::to_string(nums[0]));
            edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
            max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(nums[0], nums[1])));
        } else {
            throw ParseError("edge list: expected 'u v', got '" + std::string(body) + "'");
        }
        first = false;
    }
    if (n < 0) n = max_vertex + 1;
    if (max_vertex >= n) throw ParseError("edge list: vertex exceeds declared order");
    return Graph(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

/// Accepts either format: a first content line with two integers selects the
/// edge list, anything else is decoded as graph6 (first line only).
inline Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_order_line = false;
    while (std::getline(in, line)) {
        auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        bool numeric = true;
        int tokens = 0;
        std::istringstream ls{std::string(body)};
        std::string tok;
        while (ls >> tok) {
            ++tokens;
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-') numeric = false;
        }
        if (numeric && tokens == 2) return parse_edge_list(text);
        if (numeric && tokens == 1 && !saw_order_line) {
            saw_order_line = true;
            continue;
        }
        if (saw_order_line) return parse_edge_list(text);
        return parse_graph6(body);
    }
    if (saw_order_line) return parse_edge_list(text);
    throw ParseError("no graph found in input");
}

}  // namespace starfree
