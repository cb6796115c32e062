#pragma once

// Core graph and coloring types for the anti-coordination game engine.
//
// Vertices are 1-indexed. Undirected graphs store every edge as a symmetric
// pair of arcs, so out(v) is the full neighborhood in both cases and the
// directed payoff definition subsumes the undirected one. Graphs are
// immutable after construction and safe to share across threads.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acg {

using Vertex = int;
using Color = int;

enum class Errc {
    self_loop,
    duplicate_arc,
    vertex_out_of_range,
    directedness_mismatch,
    already_directed,
    directed_unsupported,
    syntax_error,
    coloring_mismatch,
    invalid_init,
    bad_parameter,
    budget_exceeded,
    no_equilibrium,
    too_many_variables,
    odd_order,
    too_large,
    contract_violation,
    not_strictly_stable,
    extraction_unsatisfied,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    bool directed() const { return directed_; }
    // Edge count for undirected graphs, arc count for directed ones.
    long long m() const { return m_; }

    const std::vector<Vertex>& out(Vertex v) const {
        check_vertex(v);
        return out_[v];
    }
    int out_degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(out_[v].size());
    }
    // For undirected graphs this is the plain degree.
    int degree(Vertex v) const { return out_degree(v); }

    bool has_arc(Vertex a, Vertex b) const {
        check_vertex(a);
        check_vertex(b);
        return std::binary_search(out_[a].begin(), out_[a].end(), b);
    }

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n_)
            fail(Errc::vertex_out_of_range,
                 "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }

    bool operator==(const Graph&) const = default;

private:
    friend Graph build_graph(int, bool, const std::vector<std::pair<Vertex, Vertex>>&);

    int n_ = 0;
    bool directed_ = false;
    long long m_ = 0;
    std::vector<std::vector<Vertex>> out_;  // out_[0] unused
};

// Builds a canonical graph from an arc list. For undirected graphs each edge
// is given once in either orientation and stored symmetrically. Out-neighbor
// lists end up sorted ascending, which makes all downstream iteration
// deterministic. Self-loops and duplicate arcs are rejected.
inline Graph build_graph(int n, bool directed, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    if (n < 0) fail(Errc::bad_parameter, "vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.directed_ = directed;
    g.out_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [a, b] : arcs) {
        if (a < 1 || a > n || b < 1 || b > n)
            fail(Errc::vertex_out_of_range,
                 "arc (" + std::to_string(a) + "," + std::to_string(b) + ") out of range 1.." +
                     std::to_string(n));
        if (a == b) fail(Errc::self_loop, "self-loop at vertex " + std::to_string(a));
        g.out_[a].push_back(b);
        if (!directed) g.out_[b].push_back(a);
    }
    for (Vertex v = 1; v <= n; ++v) {
        auto& nb = g.out_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            fail(Errc::duplicate_arc, "duplicate arc at vertex " + std::to_string(v));
        g.m_ += static_cast<long long>(nb.size());
    }
    if (!directed) g.m_ /= 2;
    return g;
}

inline Graph complete_graph(int q, bool directed = false) {
    if (q < 1) fail(Errc::bad_parameter, "complete graph needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex a = 1; a <= q; ++a)
        for (Vertex b = a + 1; b <= q; ++b) {
            arcs.emplace_back(a, b);
            if (directed) arcs.emplace_back(b, a);
        }
    return build_graph(q, directed, arcs);
}

inline Graph cycle_graph(int n) {
    if (n < 3) fail(Errc::bad_parameter, "cycle needs at least three vertices");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex v = 1; v < n; ++v) arcs.emplace_back(v, v + 1);
    arcs.emplace_back(n, 1);
    return build_graph(n, false, arcs);
}

// All stored arcs, in (tail, head) order. Undirected edges appear once as
// (a, b) with a < b.
inline std::vector<std::pair<Vertex, Vertex>> arc_list(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex v = 1; v <= g.n(); ++v)
        for (Vertex w : g.out(v))
            if (g.directed() || v < w) arcs.emplace_back(v, w);
    return arcs;
}

// Vertices of g2 are renumbered by offset = g1.n(); returns the combined
// graph and that offset.
inline std::pair<Graph, int> disjoint_union(const Graph& g1, const Graph& g2) {
    if (g1.directed() != g2.directed())
        fail(Errc::directedness_mismatch, "cannot union directed with undirected graph");
    int offset = g1.n();
    auto arcs = arc_list(g1);
    for (auto [a, b] : arc_list(g2)) arcs.emplace_back(a + offset, b + offset);
    return {build_graph(g1.n() + g2.n(), g1.directed(), arcs), offset};
}

// A total assignment of colors 1..k to vertices 1..n. assignment[0] is unused
// so that vertex ids index directly.
struct Coloring {
    int k = 0;
    std::vector<Color> assignment;

    int n() const { return static_cast<int>(assignment.size()) - 1; }
    Color of(Vertex v) const { return assignment[static_cast<std::size_t>(v)]; }
    Color& of(Vertex v) { return assignment[static_cast<std::size_t>(v)]; }

    bool operator==(const Coloring&) const = default;
};

// by_vertex[0] is the color of vertex 1.
inline Coloring make_coloring(int k, const std::vector<Color>& by_vertex) {
    Coloring c;
    c.k = k;
    c.assignment.resize(by_vertex.size() + 1);
    c.assignment[0] = 0;
    std::copy(by_vertex.begin(), by_vertex.end(), c.assignment.begin() + 1);
    return c;
}

inline Coloring uniform_coloring(int n, int k, Color color = 1) {
    Coloring c;
    c.k = k;
    c.assignment.assign(static_cast<std::size_t>(n) + 1, color);
    c.assignment[0] = 0;
    return c;
}

inline void validate_coloring(const Graph& g, const Coloring& c) {
    if (c.n() != g.n())
        fail(Errc::coloring_mismatch, "coloring covers " + std::to_string(c.n()) +
                                          " vertices, graph has " + std::to_string(g.n()));
    if (c.k < 1) fail(Errc::coloring_mismatch, "coloring needs at least one color");
    for (Vertex v = 1; v <= g.n(); ++v)
        if (c.of(v) < 1 || c.of(v) > c.k)
            fail(Errc::coloring_mismatch, "vertex " + std::to_string(v) + " has color " +
                                              std::to_string(c.of(v)) + " outside 1.." +
                                              std::to_string(c.k));
}

// Role labels partitioning the vertex set of an annotated graph; used by the
// reduction constructors so witnesses can be pulled back out.
struct VertexRoleMap {
    std::map<std::string, std::vector<Vertex>> roles;

    void add(const std::string& label, Vertex v) { roles[label].push_back(v); }

    const std::vector<Vertex>* find(const std::string& label) const {
        auto it = roles.find(label);
        return it == roles.end() ? nullptr : &it->second;
    }

    std::string role_of(Vertex v) const {
        for (const auto& [label, vs] : roles)
            if (std::find(vs.begin(), vs.end(), v) != vs.end()) return label;
        return {};
    }

    void validate_partition(int n) const {
        std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [label, vs] : roles)
            for (Vertex v : vs) {
                if (v < 1 || v > n)
                    fail(Errc::vertex_out_of_range, "role '" + label + "' names vertex " +
                                                        std::to_string(v) + " outside 1.." +
                                                        std::to_string(n));
                ++seen[static_cast<std::size_t>(v)];
            }
        for (Vertex v = 1; v <= n; ++v)
            if (seen[static_cast<std::size_t>(v)] != 1)
                fail(Errc::bad_parameter,
                     "roles do not partition the vertex set at vertex " + std::to_string(v));
    }

    bool operator==(const VertexRoleMap&) const = default;
};

}  // namespace acg
