#pragma once

// Constructors for the hardness reductions and tight price-of-anarchy
// instances, plus the gadget contract validators and witness extraction.
//
// Every constructor is deterministic: identical inputs and parameters yield
// identical graphs, vertex ids included. The 2-color gadgets (clause,
// persistence, negation) self-check their contracts exhaustively at
// construction time and fail loudly if a registered topology violates them.

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acg/cnf.hpp"
#include "acg/game.hpp"
#include "acg/graph.hpp"
#include "acg/graph_io.hpp"
#include "acg/search.hpp"

namespace acg {

struct ReductionOutput {
    Graph graph;
    VertexRoleMap roles;
    std::map<std::string, std::string> params;
    std::optional<Cnf> formula;  // set by the 3-SAT reduction for witness checks
};

// ---------------------------------------------------------------------------
// Tight price-of-anarchy family: two k-cliques joined by a perfect matching.
// The aligned coloring (both cliques colored 1..k) is stable with welfare
// 2(k-1)m/k; shifting the second clique's colors by one attains 2m.

struct PoaTightInstance {
    Graph graph;
    Coloring worst;
    Coloring best;
};

inline PoaTightInstance poa_tight_instance(int k) {
    if (k < 2) fail(Errc::bad_parameter, "tight instance needs k >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 1; a <= k; ++a)
        for (Vertex b = a + 1; b <= k; ++b) {
            edges.emplace_back(a, b);
            edges.emplace_back(a + k, b + k);
        }
    for (Vertex i = 1; i <= k; ++i) edges.emplace_back(i, i + k);
    PoaTightInstance out;
    out.graph = build_graph(2 * k, false, edges);
    out.worst = uniform_coloring(2 * k, k);
    out.best = uniform_coloring(2 * k, k);
    for (Vertex i = 1; i <= k; ++i) {
        out.worst.of(i) = i;
        out.worst.of(i + k) = i;
        out.best.of(i) = i;
        out.best.of(i + k) = i == k ? 1 : i + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strict stability, k >= 3: reduction from classical k-coloring. Each edge
// grows a K_{k-2} completing it to a k-clique; isolated vertices get a
// K_{k-1} attached so they stop being free to deviate.

inline ReductionOutput reduce_kcolor_to_strict(const Graph& g, int k) {
    if (g.directed()) fail(Errc::bad_parameter, "reduction takes an undirected graph");
    if (k < 3) fail(Errc::bad_parameter, "edge-gadget reduction needs k >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges = arc_list(g);
    VertexRoleMap roles;
    for (Vertex v = 1; v <= g.n(); ++v) roles.add("original", v);
    Vertex next = g.n() + 1;
    for (auto [a, b] : arc_list(g)) {
        std::vector<Vertex> gadget;
        for (int i = 0; i < k - 2; ++i) gadget.push_back(next++);
        for (std::size_t i = 0; i < gadget.size(); ++i) {
            edges.emplace_back(a, gadget[i]);
            edges.emplace_back(b, gadget[i]);
            for (std::size_t j = i + 1; j < gadget.size(); ++j)
                edges.emplace_back(gadget[i], gadget[j]);
        }
        for (Vertex v : gadget) roles.add("edge-gadget", v);
    }
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (g.degree(v) != 0) continue;
        std::vector<Vertex> clique;
        for (int i = 0; i < k - 1; ++i) clique.push_back(next++);
        for (std::size_t i = 0; i < clique.size(); ++i) {
            edges.emplace_back(v, clique[i]);
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
        }
        for (Vertex w : clique) roles.add("stabilizer", w);
    }
    ReductionOutput out;
    out.graph = build_graph(next - 1, false, edges);
    out.roles = roles;
    out.params = {{"kind", "kcolor-strict"}, {"k", std::to_string(k)}};
    return out;
}

// ---------------------------------------------------------------------------
// 2-color gadget library.
//
// Strict stability with two colors means every vertex has strictly more
// neighbors of the opposite color than of its own. Two facts drive all three
// gadgets: a degree-1 vertex is strict only when it opposes its neighbor,
// and a degree-2 vertex is strict only when both neighbors oppose it (hence
// a degree-2 vertex pins its two neighbors to a common color).

namespace detail {

// Strictness of the listed vertices under a bitmask 2-coloring (bit v-1 is
// vertex v's color), looking only at edges inside the gadget.
inline bool internals_strict(const Graph& g, const std::vector<Vertex>& internals,
                             std::uint32_t mask) {
    for (Vertex v : internals) {
        int same = 0;
        int b = (mask >> (v - 1)) & 1;
        for (Vertex w : g.out(v)) same += ((mask >> (w - 1)) & 1) == static_cast<std::uint32_t>(b);
        if (2 * same >= g.degree(v)) return false;  // needs a strict opposite majority
    }
    return true;
}

inline bool pair_mono(std::uint32_t mask, std::pair<Vertex, Vertex> p) {
    return ((mask >> (p.first - 1)) & 1) == ((mask >> (p.second - 1)) & 1);
}

}  // namespace detail

// A clause gadget: three designated literal pairs around a shared core.
//
// hexcore-v1 topology, 15 vertices: literal pairs (1,2), (3,4), (5,6); per
// pair a degree-4 hub (7, 8, 9) adjacent to its pair and to two consecutive
// core vertices; core 6-cycle 10..15. A split pair feeds its hub exactly one
// opposite neighbor, forcing both of the hub's core neighbors opposite, and
// three such demands need three pairwise-different core segment colors,
// which two colors cannot provide.
struct ClauseGadget {
    Graph graph;
    std::array<std::pair<Vertex, Vertex>, 3> literal_pairs;
    std::vector<Vertex> internals;
    std::string version;
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> hexcore_edges() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 3; ++i) {
        Vertex hub = 7 + i;
        edges.emplace_back(hub, 2 * i + 1);   // pair members
        edges.emplace_back(hub, 2 * i + 2);
        edges.emplace_back(hub, 10 + 2 * i);  // consecutive core vertices
        edges.emplace_back(hub, 11 + 2 * i);
    }
    for (Vertex v = 10; v < 15; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(15, 10);
    return edges;
}

inline void check_clause_contract(const ClauseGadget& gadget) {
    const int n = gadget.graph.n();
    // extendable[m] marks literal colorings m (bits 0..5) that admit an
    // internal completion with every internal vertex strict.
    std::vector<char> extendable(64, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!internals_strict(gadget.graph, gadget.internals, mask)) continue;
        bool any_mono = false;
        for (const auto& p : gadget.literal_pairs) any_mono |= pair_mono(mask, p);
        if (!any_mono)
            fail(Errc::contract_violation,
                 "clause gadget '" + gadget.version +
                     "': strict internal coloring with all literal pairs split (mask " +
                     std::to_string(mask) + ")");
        extendable[mask & 63u] = 1;
    }
    for (std::uint32_t lit = 0; lit < 64; ++lit) {
        bool any_mono = false;
        for (const auto& p : gadget.literal_pairs) any_mono |= pair_mono(lit, p);
        if (any_mono && !extendable[lit])
            fail(Errc::contract_violation,
                 "clause gadget '" + gadget.version +
                     "': monochromatic literal coloring " + std::to_string(lit) +
                     " admits no strict internal extension");
    }
}

}  // namespace detail

inline ClauseGadget clause_gadget(const std::string& version = "hexcore-v1") {
    if (version != "hexcore-v1")
        fail(Errc::bad_parameter, "unknown clause gadget version '" + version + "'");
    ClauseGadget gadget;
    gadget.graph = build_graph(15, false, detail::hexcore_edges());
    gadget.literal_pairs = {{{1, 2}, {3, 4}, {5, 6}}};
    for (Vertex v = 7; v <= 15; ++v) gadget.internals.push_back(v);
    gadget.version = version;
    detail::check_clause_contract(gadget);
    return gadget;
}

// Connector gadgets between two literal pairs. In every coloring whose
// internal vertices are strict:
//   persistence: side_b copies side_a exactly, so monochromatic status agrees;
//   negation:    b1 copies a1 but b2 opposes a2, so the status flips.
struct ConnectorGadget {
    Graph graph;
    std::pair<Vertex, Vertex> side_a;
    std::pair<Vertex, Vertex> side_b;
    std::vector<Vertex> internals;
};

namespace detail {

inline void check_connector_contract(const ConnectorGadget& gadget, bool flips,
                                     const std::string& name) {
    const int n = gadget.graph.n();
    std::vector<char> extendable(4, 0);  // side_a colorings admitting a strict completion
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!internals_strict(gadget.graph, gadget.internals, mask)) continue;
        bool a = pair_mono(mask, gadget.side_a);
        bool b = pair_mono(mask, gadget.side_b);
        if ((a == b) == flips)
            fail(Errc::contract_violation,
                 name + " gadget: strict internal coloring with mismatched sides (mask " +
                     std::to_string(mask) + ")");
        std::uint32_t a_bits = ((mask >> (gadget.side_a.first - 1)) & 1) |
                               (((mask >> (gadget.side_a.second - 1)) & 1) << 1);
        extendable[a_bits] = 1;
    }
    for (std::uint32_t a_bits = 0; a_bits < 4; ++a_bits)
        if (!extendable[a_bits])
            fail(Errc::contract_violation,
                 name + " gadget: side_a coloring " + std::to_string(a_bits) +
                     " admits no strict completion");
}

}  // namespace detail

inline ConnectorGadget persistence_gadget() {
    // a1=1 a2=2 b1=3 b2=4; couplers 5 (a1,b1) and 6 (a2,b2). A degree-2
    // coupler pins both its neighbors to the color it opposes.
    ConnectorGadget gadget;
    gadget.graph = build_graph(6, false, {{5, 1}, {5, 3}, {6, 2}, {6, 4}});
    gadget.side_a = {1, 2};
    gadget.side_b = {3, 4};
    gadget.internals = {5, 6};
    detail::check_connector_contract(gadget, false, "persistence");
    return gadget;
}

inline ConnectorGadget negation_gadget() {
    // Same equality coupler on (a1, b1); a two-vertex chain a2-6-7-b2 forces
    // b2 opposite a2.
    ConnectorGadget gadget;
    gadget.graph = build_graph(7, false, {{5, 1}, {5, 3}, {6, 2}, {6, 7}, {7, 4}});
    gadget.side_a = {1, 2};
    gadget.side_b = {3, 4};
    gadget.internals = {5, 6, 7};
    detail::check_connector_contract(gadget, true, "negation");
    return gadget;
}

// ---------------------------------------------------------------------------
// Strict stability, k = 2: reduction from 3-SAT. One clause gadget per
// clause; per variable a reference literal pair, joined to each occurrence by
// a persistence or negation connector as the sign dictates; two pendant
// vertices on every literal-gadget vertex. Pendants and couplers always
// oppose their anchors in a strict coloring, which hands every literal vertex
// an unconditional opposite majority and leaves the forcing arguments to the
// gadget cores.

inline ReductionOutput reduce_3sat_to_strict2(const Cnf& f) {
    validate_cnf(f);
    ClauseGadget gadget = clause_gadget();  // self-checks the contract

    const int clause_count = static_cast<int>(f.clauses.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    VertexRoleMap roles;

    auto clause_base = [](int ci) { return 15 * ci; };
    for (int ci = 0; ci < clause_count; ++ci) {
        int base = clause_base(ci);
        for (auto [a, b] : arc_list(gadget.graph)) edges.emplace_back(base + a, base + b);
        for (int j = 0; j < 3; ++j) {
            roles.add("c" + std::to_string(ci + 1) + "-lit" + std::to_string(j + 1),
                      base + gadget.literal_pairs[static_cast<std::size_t>(j)].first);
            roles.add("c" + std::to_string(ci + 1) + "-lit" + std::to_string(j + 1),
                      base + gadget.literal_pairs[static_cast<std::size_t>(j)].second);
        }
        for (Vertex v : gadget.internals)
            roles.add("c" + std::to_string(ci + 1) + "-internal", base + v);
    }

    const int ref_base = 15 * clause_count;
    for (int v = 1; v <= f.num_vars; ++v) {
        roles.add("ref" + std::to_string(v), ref_base + 2 * v - 1);
        roles.add("ref" + std::to_string(v), ref_base + 2 * v);
    }

    Vertex next = ref_base + 2 * f.num_vars + 1;
    for (int ci = 0; ci < clause_count; ++ci) {
        int base = clause_base(ci);
        for (int j = 0; j < 3; ++j) {
            const Literal lit = f.clauses[static_cast<std::size_t>(ci)].lits[static_cast<std::size_t>(j)];
            Vertex occ1 = base + gadget.literal_pairs[static_cast<std::size_t>(j)].first;
            Vertex occ2 = base + gadget.literal_pairs[static_cast<std::size_t>(j)].second;
            Vertex r1 = ref_base + 2 * lit.var - 1;
            Vertex r2 = ref_base + 2 * lit.var;
            if (!lit.negated) {
                Vertex z1 = next++, z2 = next++;
                edges.emplace_back(z1, occ1);
                edges.emplace_back(z1, r1);
                edges.emplace_back(z2, occ2);
                edges.emplace_back(z2, r2);
                roles.add("connector", z1);
                roles.add("connector", z2);
            } else {
                Vertex z1 = next++, w = next++, z = next++;
                edges.emplace_back(z1, occ1);
                edges.emplace_back(z1, r1);
                edges.emplace_back(w, occ2);
                edges.emplace_back(w, z);
                edges.emplace_back(z, r2);
                roles.add("connector", z1);
                roles.add("connector", w);
                roles.add("connector", z);
            }
        }
    }

    std::vector<Vertex> literal_vertices;
    for (int ci = 0; ci < clause_count; ++ci)
        for (Vertex v = 1; v <= 6; ++v) literal_vertices.push_back(clause_base(ci) + v);
    for (int v = 1; v <= 2 * f.num_vars; ++v) literal_vertices.push_back(ref_base + v);
    for (Vertex anchor : literal_vertices)
        for (int i = 0; i < 2; ++i) {
            Vertex pendant = next++;
            edges.emplace_back(pendant, anchor);
            roles.add("pendant", pendant);
        }

    ReductionOutput out;
    out.graph = build_graph(next - 1, false, edges);
    out.roles = roles;
    out.params = {{"kind", "sat-strict2"},
                  {"vars", std::to_string(f.num_vars)},
                  {"clauses", std::to_string(clause_count)},
                  {"gadget", gadget.version}};
    out.formula = f;
    return out;
}

// A variable is true iff its reference literal pair is monochromatic. The
// result is checked against the source formula; an unsatisfied extraction
// would falsify the reduction and is reported as such.
inline Assignment extract_assignment(const ReductionOutput& r, const Coloring& c) {
    if (!r.formula) fail(Errc::bad_parameter, "reduction output carries no source formula");
    if (classify(r.graph, c).overall != Stability::strictly_stable)
        fail(Errc::not_strictly_stable, "witness extraction needs a strictly stable coloring");
    const Cnf& f = *r.formula;
    Assignment a(static_cast<std::size_t>(f.num_vars) + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) {
        const auto* pair = r.roles.find("ref" + std::to_string(v));
        if (!pair || pair->size() != 2)
            fail(Errc::bad_parameter, "missing reference pair for variable " + std::to_string(v));
        a[static_cast<std::size_t>(v)] = c.of((*pair)[0]) == c.of((*pair)[1]);
    }
    if (!satisfies(f, a))
        fail(Errc::extraction_unsatisfied,
             "extracted assignment does not satisfy the source formula");
    return a;
}

// ---------------------------------------------------------------------------
// Directed constructions.

// Replaces each undirected edge by two opposite arcs. Payoffs, and hence the
// classification of any coloring, are unchanged.
inline Graph undirected_to_directed(const Graph& g) {
    if (g.directed()) fail(Errc::already_directed, "graph is already directed");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex v = 1; v <= g.n(); ++v)
        for (Vertex w : g.out(v)) arcs.emplace_back(v, w);
    return build_graph(g.n(), true, arcs);
}

// Stable 2-colorings of the output correspond exactly to balanced unfriendly
// partitions of the (even-order, undirected) input: u and v break any color
// imbalance among the originals, w copies u's color indirectly, and the
// directed 3-cycle is stabilizable precisely when u and w agree.
inline ReductionOutput reduce_bup_to_directed2(const Graph& g) {
    if (g.directed()) fail(Errc::bad_parameter, "reduction takes an undirected graph");
    if (g.n() % 2 != 0) fail(Errc::odd_order, "reduction needs an even vertex count");
    int n = g.n();
    Vertex u = n + 1, v = n + 2, w = n + 3, t1 = n + 4, t2 = n + 5, t3 = n + 6;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b : g.out(a)) arcs.emplace_back(a, b);
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
    for (Vertex a = 1; a <= n; ++a) {
        arcs.emplace_back(u, a);
        arcs.emplace_back(v, a);
    }
    arcs.emplace_back(w, v);
    arcs.emplace_back(t1, t2);
    arcs.emplace_back(t2, t3);
    arcs.emplace_back(t3, t1);
    arcs.emplace_back(t1, u);
    arcs.emplace_back(t1, w);
    ReductionOutput out;
    out.graph = build_graph(n + 6, true, arcs);
    for (Vertex a = 1; a <= n; ++a) out.roles.add("original", a);
    out.roles.add("u", u);
    out.roles.add("v", v);
    out.roles.add("w", w);
    out.roles.add("cycle", t1);
    out.roles.add("cycle", t2);
    out.roles.add("cycle", t3);
    out.params = {{"kind", "bup-directed2"}};
    return out;
}

// Lifts directed stable 2-coloring existence to k colors. x and y only watch
// each other, so they take two distinct colors; every K_{k-2} copy is forced
// onto the remaining k-2 colors; with copies >= n those colors are strictly
// worse than x's and y's for every original vertex, pinning the original part
// to a two-color game.
inline ReductionOutput reduce_directed2_to_directedk(const Graph& g, int k, long long copies) {
    if (!g.directed()) fail(Errc::bad_parameter, "reduction takes a directed graph");
    if (k < 3) fail(Errc::bad_parameter, "reduction needs k >= 3");
    if (copies < g.n())
        fail(Errc::bad_parameter, "need at least n = " + std::to_string(g.n()) + " copies");
    int n = g.n();
    Vertex x = n + 1, y = n + 2;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b : g.out(a)) arcs.emplace_back(a, b);
    arcs.emplace_back(x, y);
    arcs.emplace_back(y, x);
    ReductionOutput out;
    for (Vertex a = 1; a <= n; ++a) out.roles.add("original", a);
    out.roles.add("x", x);
    out.roles.add("y", y);
    Vertex next = n + 3;
    for (long long c = 0; c < copies; ++c) {
        std::vector<Vertex> copy;
        for (int j = 0; j < k - 2; ++j) copy.push_back(next++);
        for (std::size_t i = 0; i < copy.size(); ++i) {
            arcs.emplace_back(copy[i], x);
            arcs.emplace_back(copy[i], y);
            for (std::size_t j = i + 1; j < copy.size(); ++j) {
                arcs.emplace_back(copy[i], copy[j]);
                arcs.emplace_back(copy[j], copy[i]);
            }
            for (Vertex a = 1; a <= n; ++a) arcs.emplace_back(a, copy[i]);
        }
        for (Vertex vtx : copy) out.roles.add("copy-" + std::to_string(c + 1), vtx);
    }
    out.graph = build_graph(next - 1, true, arcs);
    out.params = {{"kind", "directed2-directedk"},
                  {"k", std::to_string(k)},
                  {"copies", std::to_string(copies)}};
    return out;
}

// ---------------------------------------------------------------------------
// Mixed coordination / anti-coordination games encoded as pure
// anti-coordination digraphs via proxies.

struct MixedArc {
    Vertex from = 0;
    Vertex to = 0;
    bool coordinate = false;

    bool operator==(const MixedArc&) const = default;
};

struct MixedGameSpec {
    int n = 0;
    std::vector<MixedArc> arcs;
    int k = 2;

    bool operator==(const MixedGameSpec&) const = default;
};

// `p <n> <m> mixed` header, then m lines `a <u> <v> <c|x>`
// (c = coordinate, x = anti-coordinate).
inline MixedGameSpec parse_mixed_spec(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(in, line, lineno)) detail::syntax_fail(lineno, "missing 'p' header");
    std::istringstream head(line);
    std::string tag, kind;
    long long n = 0, m = 0;
    if (!(head >> tag >> n >> m >> kind) || tag != "p" || kind != "mixed" || n < 0 || m < 0)
        detail::syntax_fail(lineno, "expected 'p <n> <m> mixed', got '" + line + "'");
    MixedGameSpec spec;
    spec.n = static_cast<int>(n);
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_line(in, line, lineno))
            detail::syntax_fail(lineno, "header promises " + std::to_string(m) + " arcs");
        std::istringstream row(line);
        std::string label;
        long long a = 0, b = 0;
        if (!(row >> tag >> a >> b >> label) || tag != "a" || (label != "c" && label != "x"))
            detail::syntax_fail(lineno, "expected 'a <u> <v> <c|x>', got '" + line + "'");
        spec.arcs.push_back(MixedArc{static_cast<Vertex>(a), static_cast<Vertex>(b), label == "c"});
    }
    if (detail::next_line(in, line, lineno)) detail::syntax_fail(lineno, "trailing content");
    return spec;
}

inline MixedGameSpec parse_mixed_spec(const std::string& text) {
    std::istringstream in(text);
    return parse_mixed_spec(in);
}

inline void write_mixed_spec(std::ostream& out, const MixedGameSpec& spec) {
    out << "p " << spec.n << ' ' << spec.arcs.size() << " mixed\n";
    for (const auto& arc : spec.arcs)
        out << "a " << arc.from << ' ' << arc.to << ' ' << (arc.coordinate ? 'c' : 'x') << '\n';
}

// Coordinate arcs (u, v) become anti-coordination proxies: a single proxy
// vertex for k = 2 (u -> p -> v), a bidirected K_{k-1} otherwise (u -> each
// member -> v). In a stable coloring the proxy block occupies every color
// except v's, which makes agreeing with v the unique best use of those arcs.
inline ReductionOutput coordination_proxy_transform(const MixedGameSpec& spec) {
    if (spec.k < 2) fail(Errc::bad_parameter, "proxy transform needs k >= 2");
    std::vector<std::pair<Vertex, Vertex>> arcs;
    ReductionOutput out;
    for (Vertex v = 1; v <= spec.n; ++v) out.roles.add("original", v);
    Vertex next = spec.n + 1;
    for (const auto& arc : spec.arcs) {
        if (arc.from < 1 || arc.from > spec.n || arc.to < 1 || arc.to > spec.n)
            fail(Errc::vertex_out_of_range, "mixed arc endpoint out of range");
        if (!arc.coordinate) {
            arcs.emplace_back(arc.from, arc.to);
            continue;
        }
        std::vector<Vertex> proxy;
        for (int j = 0; j < std::max(1, spec.k - 1); ++j) proxy.push_back(next++);
        for (std::size_t i = 0; i < proxy.size(); ++i) {
            arcs.emplace_back(arc.from, proxy[i]);
            arcs.emplace_back(proxy[i], arc.to);
            for (std::size_t j = i + 1; j < proxy.size(); ++j) {
                arcs.emplace_back(proxy[i], proxy[j]);
                arcs.emplace_back(proxy[j], proxy[i]);
            }
        }
        for (Vertex p : proxy) out.roles.add("proxy", p);
    }
    out.graph = build_graph(next - 1, true, arcs);
    out.params = {{"kind", "proxy"}, {"k", std::to_string(spec.k)}};
    return out;
}

}  // namespace acg
