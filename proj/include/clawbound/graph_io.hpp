#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"

namespace clawbound {

// graph6, short form only (n <= 62): header byte n+63, then the upper
// triangle in column order -- for j = 1..n-1 the bits (0,j)..(j-1,j) --
// packed big-endian into 6-bit groups, each stored as group+63.

inline constexpr int kGraph6MaxVertices = 62;

inline std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw input_error("emit_graph6: " + std::to_string(n) + " vertices exceeds the " +
                          std::to_string(kGraph6MaxVertices) + "-vertex short form");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("parse_graph6: empty input", 0);
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126) throw parse_error("parse_graph6: long-form header unsupported", 0);
    if (head < 63 || head > 125)
        throw parse_error("parse_graph6: invalid header byte " + std::to_string(head), 0);
    const int n = head - 63;
    const int bits = n * (n - 1) / 2;
    const std::size_t body = (static_cast<std::size_t>(bits) + 5) / 6;
    if (text.size() < 1 + body)
        throw parse_error("parse_graph6: truncated body, expected " + std::to_string(body) +
                              " data bytes",
                          text.size());
    if (text.size() > 1 + body)
        throw parse_error("parse_graph6: trailing data after graph", 1 + body);

    Graph g(n);
    int i = 0, j = 1;
    for (std::size_t byte = 0; byte < body; ++byte) {
        const unsigned char raw = static_cast<unsigned char>(text[1 + byte]);
        if (raw < 63 || raw > 126)
            throw parse_error("parse_graph6: invalid data byte " + std::to_string(raw), 1 + byte);
        const int group = raw - 63;
        for (int b = 5; b >= 0; --b) {
            const bool bit = (group >> b) & 1;
            if (j < n) {
                if (bit) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw parse_error("parse_graph6: nonzero padding bit", 1 + byte);
            }
        }
    }
    return g;
}

// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw input_error("edge list: missing header line");
    int n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": expected header \"n m\"");
    }
    if (n < 0 || m < 0)
        throw input_error("edge list: negative count in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        if (!next_line())
            throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(e));
        std::istringstream es(line);
        int u = -1, v = -1;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": expected edge \"u v\"");
        edges.emplace_back(u, v);
    }
    if (next_line())
        throw input_error("edge list line " + std::to_string(lineno) + ": trailing content");
    return from_edge_list(n, edges);  // range/loop checks live there
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (v > u) out << u << ' ' << v << '\n';
        });
    return out.str();
}

namespace detail {
inline std::string strip_ws(std::string s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
}  // namespace detail

// One graph per line; blank lines and an optional leading ">>graph6<<" tag
// are tolerated.
inline std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string tok = detail::strip_ws(line);
        if (first) {
            first = false;
            static constexpr std::string_view tag = ">>graph6<<";
            if (tok.rfind(tag, 0) == 0) tok = tok.substr(tag.size());
        }
        if (tok.empty()) continue;
        out.push_back(parse_graph6(tok));
    }
    return out;
}

// Reads .g6 (one graph per line) or .el (single graph) files.
inline std::vector<Graph> read_graph_file(const std::string& path) {
    const bool g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
    const bool el = path.size() >= 3 && path.compare(path.size() - 3, 3, ".el") == 0;
    if (!g6 && !el)
        throw config_error("unknown graph file extension (want .g6 or .el): " + path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return g6 ? parse_graph6_lines(text) : std::vector<Graph>{parse_edge_list(text)};
}

}  // namespace clawbound
