#pragma once

// File formats.
//
// Graph file:    header `p <n> <m> <u|d>`, then exactly m lines `e <a> <b>`.
//                For `u` each edge is listed once in either orientation.
// Coloring file: header `k <K>`, then n lines `v <vertex> <color>` in
//                ascending vertex order.
// Role sidecar:  lines `r <vertex> <role-label>`.
// Lines starting with `#` and blank lines are ignored everywhere. Writers
// emit canonical (sorted) output, so write -> parse is the identity.

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acg/graph.hpp"

namespace acg {

namespace detail {

// Reads the next meaningful line, tracking the 1-based line number for
// error messages.
inline bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] inline void syntax_fail(int lineno, const std::string& what) {
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(in, line, lineno)) detail::syntax_fail(lineno, "missing 'p' header");
    std::istringstream head(line);
    std::string tag, kind;
    long long n = 0, m = 0;
    if (!(head >> tag >> n >> m >> kind) || tag != "p" || (kind != "u" && kind != "d"))
        detail::syntax_fail(lineno, "expected 'p <n> <m> <u|d>', got '" + line + "'");
    if (n < 0 || m < 0) detail::syntax_fail(lineno, "negative count in header");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_line(in, line, lineno))
            detail::syntax_fail(lineno, "header promises " + std::to_string(m) +
                                            " arcs, file ends after " + std::to_string(i));
        std::istringstream row(line);
        long long a = 0, b = 0;
        if (!(row >> tag >> a >> b) || tag != "e")
            detail::syntax_fail(lineno, "expected 'e <a> <b>', got '" + line + "'");
        arcs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (detail::next_line(in, line, lineno))
        detail::syntax_fail(lineno, "trailing content after " + std::to_string(m) + " arcs");
    return build_graph(static_cast<int>(n), kind == "d", arcs);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.n() << ' ' << g.m() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
    for (auto [a, b] : arc_list(g)) out << "e " << a << ' ' << b << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline Coloring parse_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(in, line, lineno)) detail::syntax_fail(lineno, "missing 'k' header");
    std::istringstream head(line);
    std::string tag;
    int k = 0;
    if (!(head >> tag >> k) || tag != "k")
        detail::syntax_fail(lineno, "expected 'k <K>', got '" + line + "'");
    if (k < 1) detail::syntax_fail(lineno, "need at least one color");
    std::vector<Color> colors;
    while (detail::next_line(in, line, lineno)) {
        std::istringstream row(line);
        Vertex v = 0;
        Color c = 0;
        if (!(row >> tag >> v >> c) || tag != "v")
            detail::syntax_fail(lineno, "expected 'v <vertex> <color>', got '" + line + "'");
        if (v != static_cast<Vertex>(colors.size()) + 1)
            detail::syntax_fail(lineno, "vertices must appear in ascending order starting at 1");
        colors.push_back(c);
    }
    return make_coloring(k, colors);
}

inline Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
    out << "k " << c.k << '\n';
    for (Vertex v = 1; v <= c.n(); ++v) out << "v " << v << ' ' << c.of(v) << '\n';
}

inline void write_roles(std::ostream& out, const VertexRoleMap& roles, int n) {
    std::vector<std::string> by_vertex(static_cast<std::size_t>(n) + 1);
    for (const auto& [label, vs] : roles.roles)
        for (Vertex v : vs)
            if (v >= 1 && v <= n) by_vertex[static_cast<std::size_t>(v)] = label;
    for (Vertex v = 1; v <= n; ++v) out << "r " << v << ' ' << by_vertex[static_cast<std::size_t>(v)] << '\n';
}

inline VertexRoleMap parse_roles(std::istream& in) {
    VertexRoleMap roles;
    std::string line;
    int lineno = 0;
    while (detail::next_line(in, line, lineno)) {
        std::istringstream row(line);
        std::string tag, label;
        Vertex v = 0;
        if (!(row >> tag >> v >> label) || tag != "r")
            detail::syntax_fail(lineno, "expected 'r <vertex> <role-label>', got '" + line + "'");
        roles.add(label, v);
    }
    return roles;
}

// DOT rendering: vertices labeled by id, fills drawn from a fixed 8-color
// palette indexed by color id, role labels as a second label line. Output is
// deterministic (vertices and arcs ascending).
inline std::string emit_dot(const Graph& g, const Coloring* coloring = nullptr,
                            const VertexRoleMap* roles = nullptr) {
    static const std::array<const char*, 8> palette = {
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
        "#ff7f00", "#ffff33", "#a65628", "#f781bf"};
    if (coloring && coloring->n() != g.n())
        fail(Errc::coloring_mismatch, "coloring covers " + std::to_string(coloring->n()) +
                                          " vertices, graph has " + std::to_string(g.n()));
    std::ostringstream out;
    out << (g.directed() ? "digraph" : "graph") << " G {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (Vertex v = 1; v <= g.n(); ++v) {
        out << "  " << v << " [label=\"" << v;
        if (roles) {
            std::string role = roles->role_of(v);
            if (!role.empty()) out << "\\n" << role;
        }
        out << "\"";
        if (coloring) out << ", fillcolor=\"" << palette[static_cast<std::size_t>(coloring->of(v) - 1) % palette.size()] << "\"";
        out << "];\n";
    }
    const char* link = g.directed() ? " -> " : " -- ";
    for (auto [a, b] : arc_list(g)) out << "  " << a << link << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace acg
