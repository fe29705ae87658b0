#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/mycielski.hpp"
#include "brush/orientation.hpp"

namespace brush {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline bool parse_int(std::string_view token, int& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

// Shared duplicate/self-loop validation with per-line diagnostics.
struct EdgeAccumulator {
    std::vector<Graph::Edge> edges;

    void add(int u, int v, int line) {
        if (u == v)
            throw parse_error(parse_error_kind::self_loop, line,
                              "self-loop " + std::to_string(u) + " " + std::to_string(v));
        if (u > v)
            std::swap(u, v);
        for (const auto& [a, b] : edges)
            if (a == u && b == v)
                throw parse_error(parse_error_kind::duplicate_edge, line,
                                  "duplicate edge " + std::to_string(u) + " " +
                                      std::to_string(v));
        edges.emplace_back(u, v);
    }
};

}  // namespace detail

// Edge-list format: '#' comment lines, an optional leading header
// "n <vertex count>", then one "u v" pair per line with 0-based ids.
// Without a header the vertex count is max id + 1.
inline Graph parse_edge_list(std::string_view text) {
    int vertex_count = -1;  // -1: no header
    bool body_seen = false;
    detail::EdgeAccumulator acc;
    int max_id = -1;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto tokens = detail::tokenize(lines[i]);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        if (tokens[0] == "n") {
            if (body_seen || vertex_count >= 0)
                throw parse_error(parse_error_kind::bad_header, line_no,
                                  "header must appear once, before any edge");
            int n = 0;
            if (tokens.size() != 2 || !detail::parse_int(tokens[1], n) || n < 0)
                throw parse_error(parse_error_kind::bad_header, line_no,
                                  "bad header, expected: n <count>");
            vertex_count = n;
            continue;
        }
        int u = 0, v = 0;
        if (tokens.size() != 2 || !detail::parse_int(tokens[0], u) ||
            !detail::parse_int(tokens[1], v) || u < 0 || v < 0)
            throw parse_error(parse_error_kind::malformed_line, line_no,
                              "expected two nonnegative vertex ids");
        if (vertex_count >= 0 && (u >= vertex_count || v >= vertex_count))
            throw parse_error(parse_error_kind::vertex_out_of_range, line_no,
                              "vertex id exceeds declared count");
        body_seen = true;
        acc.add(u, v, line_no);
        max_id = std::max({max_id, u, v});
    }
    int n = vertex_count >= 0 ? vertex_count : max_id + 1;
    return Graph(n, std::move(acc.edges));
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

// DIMACS format: 'c' comments, one "p edge <n> <m>" problem line, then m
// lines "e u v" with 1-based ids.
inline Graph parse_dimacs(std::string_view text) {
    int vertex_count = 0;
    int declared_edges = 0;
    bool have_problem = false;
    detail::EdgeAccumulator acc;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto tokens = detail::tokenize(lines[i]);
        if (tokens.empty() || tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (have_problem)
                throw parse_error(parse_error_kind::duplicate_problem_line, line_no,
                                  "second p line");
            int n = 0, m = 0;
            if (tokens.size() != 4 || tokens[1] != "edge" ||
                !detail::parse_int(tokens[2], n) || !detail::parse_int(tokens[3], m) ||
                n < 0 || m < 0)
                throw parse_error(parse_error_kind::malformed_line, line_no,
                                  "expected: p edge <vertices> <edges>");
            have_problem = true;
            vertex_count = n;
            declared_edges = m;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_problem)
                throw parse_error(parse_error_kind::missing_problem_line, line_no,
                                  "e line before p line");
            int u = 0, v = 0;
            if (tokens.size() != 3 || !detail::parse_int(tokens[1], u) ||
                !detail::parse_int(tokens[2], v))
                throw parse_error(parse_error_kind::malformed_line, line_no,
                                  "expected: e <u> <v>");
            if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
                throw parse_error(parse_error_kind::vertex_out_of_range, line_no,
                                  "vertex id outside 1.." + std::to_string(vertex_count));
            acc.add(u - 1, v - 1, line_no);
            continue;
        }
        throw parse_error(parse_error_kind::malformed_line, line_no,
                          "unknown line type");
    }
    if (!have_problem)
        throw parse_error(parse_error_kind::missing_problem_line,
                          static_cast<int>(lines.size()) + 1, "no p line");
    if (static_cast<int>(acc.edges.size()) != declared_edges)
        throw parse_error(parse_error_kind::edge_count_mismatch,
                          static_cast<int>(lines.size()) + 1,
                          "p line declares " + std::to_string(declared_edges) +
                              " edges, found " + std::to_string(acc.edges.size()));
    return Graph(vertex_count, std::move(acc.edges));
}

inline std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

struct DotOptions {
    const MycielskiLabeling* labeling = nullptr;  // tag vertices v<i>/x<i>/w
    const BrushAllocation* brushes = nullptr;     // append brush counts
    std::string name = "G";
};

namespace detail {

inline std::string dot_label(int v, const DotOptions& opts) {
    std::string label;
    if (opts.labeling) {
        const auto& lab = *opts.labeling;
        if (v == lab.root) {
            label = "w";
        } else if (v < static_cast<int>(lab.original.size())) {
            label = "v" + std::to_string(v);
        } else {
            label = "x" + std::to_string(v - static_cast<int>(lab.original.size()));
        }
    }
    if (opts.brushes) {
        if (!label.empty())
            label += " ";
        label += "b=" + std::to_string(opts.brushes->at(v));
    }
    return label;
}

inline void dot_nodes(std::ostringstream& out, int n, const DotOptions& opts) {
    for (int v = 0; v < n; ++v) {
        std::string label = dot_label(v, opts);
        out << "  " << v;
        if (!label.empty())
            out << " [label=\"" << label << "\"]";
        out << ";\n";
    }
}

}  // namespace detail

// Deterministic DOT text: nodes in id order, edges in canonical order.
inline std::string write_dot(const Graph& g, const DotOptions& opts = {}) {
    std::ostringstream out;
    out << "graph " << opts.name << " {\n";
    detail::dot_nodes(out, g.vertex_count(), opts);
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string write_dot(const Orientation& o, const DotOptions& opts = {}) {
    std::ostringstream out;
    out << "digraph " << opts.name << " {\n";
    detail::dot_nodes(out, o.base().vertex_count(), opts);
    for (int e = 0; e < o.arc_count(); ++e)
        out << "  " << o.tail(e) << " -> " << o.head(e) << ";\n";
    out << "}\n";
    return out.str();
}

// Line-oriented trace text: a header with the brush total and outcome, one
// line per firing step, and the dirty edges left behind when stuck.
inline std::string format_trace(const CleaningTrace& trace) {
    std::ostringstream out;
    out << "total " << trace.total_brushes << " outcome "
        << (trace.outcome == Outcome::cleaned ? "cleaned" : "stuck") << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        out << "step " << i + 1 << " fire " << step.vertex;
        for (const auto& move : step.moves)
            out << " " << move.from << "->" << move.to;
        out << "\n";
    }
    if (!trace.remaining_dirty.empty()) {
        out << "dirty";
        for (const auto& [u, v] : trace.remaining_dirty)
            out << " " << u << "-" << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace brush
