#pragma once

// The anti-coordination game itself: payoffs, social welfare, the potential
// function, best responses, stability classification, and convergent
// best-response dynamics.
//
// A vertex's payoff is the number of out-neighbors with a different color
// (for undirected graphs, out-neighbors are all neighbors). On undirected
// graphs the number of properly colored edges is an exact potential: every
// improving move raises it by the mover's payoff gain, so greedy dynamics
// converge within |E| recolorings.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "acg/graph.hpp"
#include "acg/rng.hpp"

namespace acg {

enum class Stability { unstable, stable_nonstrict, strictly_stable };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::unstable: return "unstable";
        case Stability::stable_nonstrict: return "stable-non-strict";
        case Stability::strictly_stable: return "strictly-stable";
    }
    return "?";
}

inline long long payoff(const Graph& g, const Coloring& c, Vertex v) {
    validate_coloring(g, c);
    g.check_vertex(v);
    long long diff = 0;
    for (Vertex w : g.out(v)) diff += c.of(w) != c.of(v);
    return diff;
}

inline long long social_welfare(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    // Sum over all stored arcs; an undirected edge is stored twice, once per
    // endpoint payoff.
    long long w = 0;
    for (Vertex v = 1; v <= g.n(); ++v)
        for (Vertex u : g.out(v)) w += c.of(u) != c.of(v);
    return w;
}

// Number of properly colored edges. Only meaningful for undirected graphs,
// where it is an exact potential and social welfare equals twice its value.
inline long long potential(const Graph& g, const Coloring& c) {
    if (g.directed())
        fail(Errc::directed_unsupported, "the potential function exists only for undirected graphs");
    return social_welfare(g, c) / 2;
}

// The set of colors minimizing the number of out-neighbors sharing them;
// never empty. A vertex with no out-neighbors gets all k colors.
inline std::vector<Color> best_response_set(const Graph& g, const Coloring& c, Vertex v) {
    validate_coloring(g, c);
    g.check_vertex(v);
    std::vector<long long> cnt(static_cast<std::size_t>(c.k) + 1, 0);
    for (Vertex w : g.out(v)) ++cnt[static_cast<std::size_t>(c.of(w))];
    long long best = cnt[1];
    for (Color m = 2; m <= c.k; ++m) best = std::min(best, cnt[static_cast<std::size_t>(m)]);
    std::vector<Color> out;
    for (Color m = 1; m <= c.k; ++m)
        if (cnt[static_cast<std::size_t>(m)] == best) out.push_back(m);
    return out;
}

// A vertex whose current color ties the minimum is happy; only a strictly
// better alternative makes it unhappy.
inline bool is_unhappy(const Graph& g, const Coloring& c, Vertex v) {
    auto br = best_response_set(g, c, v);
    return std::find(br.begin(), br.end(), c.of(v)) == br.end();
}

struct VertexReport {
    std::vector<Color> best_response;
    long long payoff = 0;
    bool unhappy = false;
};

struct StabilityReport {
    std::vector<VertexReport> per_vertex;  // 1-indexed, [0] unused
    Stability overall = Stability::unstable;
};

inline StabilityReport classify(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    StabilityReport report;
    report.per_vertex.resize(static_cast<std::size_t>(g.n()) + 1);
    bool any_unhappy = false;
    bool all_singleton_current = true;
    for (Vertex v = 1; v <= g.n(); ++v) {
        auto& r = report.per_vertex[static_cast<std::size_t>(v)];
        r.best_response = best_response_set(g, c, v);
        r.payoff = payoff(g, c, v);
        bool current_is_best =
            std::find(r.best_response.begin(), r.best_response.end(), c.of(v)) != r.best_response.end();
        r.unhappy = !current_is_best;
        any_unhappy |= r.unhappy;
        if (r.best_response.size() != 1 || !current_is_best) all_singleton_current = false;
    }
    report.overall = any_unhappy ? Stability::unstable
                     : all_singleton_current ? Stability::strictly_stable
                                             : Stability::stable_nonstrict;
    return report;
}

struct DynamicsStep {
    Vertex vertex = 0;
    Color old_color = 0;
    Color new_color = 0;
    long long phi_before = 0;  // meaningful only when has_potential
    long long phi_after = 0;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    bool converged = false;
    bool has_potential = false;  // false for directed runs
    Coloring final;
};

// Greedy best-response dynamics: repeatedly recolor the lowest-indexed
// unhappy vertex to the smallest color in its best-response set. Undirected
// runs converge within |E| steps; directed runs stop at the step cap
// (default 10*n*k when max_steps < 0) with converged = false.
inline DynamicsTrace run_dynamics(const Graph& g, int k, const Coloring& init,
                                  long long max_steps = -1) {
    if (k < 2) fail(Errc::bad_parameter, "dynamics needs k >= 2");
    if (init.k != k || init.n() != g.n()) fail(Errc::invalid_init, "initial coloring does not match graph and k");
    for (Vertex v = 1; v <= g.n(); ++v)
        if (init.of(v) < 1 || init.of(v) > k)
            fail(Errc::invalid_init, "initial color out of range at vertex " + std::to_string(v));
    if (max_steps < 0) max_steps = g.directed() ? 10LL * g.n() * k : g.m() + 1;

    DynamicsTrace trace;
    trace.has_potential = !g.directed();
    Coloring c = init;

    int n = g.n();
    // cnt[v][m]: out-neighbors of v currently colored m.
    std::vector<std::vector<int>> cnt(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex w : g.out(v)) ++cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(c.of(w))];

    // Vertices whose payoff depends on v's color: in-neighbors (equal to the
    // neighborhood when undirected).
    std::vector<std::vector<Vertex>> watchers(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v)
        for (Vertex w : g.out(v)) watchers[static_cast<std::size_t>(w)].push_back(v);

    auto strict_gain = [&](Vertex v) -> std::pair<Color, int> {
        // Smallest best-response color and its advantage over the current one.
        const auto& row = cnt[static_cast<std::size_t>(v)];
        Color best = 1;
        for (Color m = 2; m <= k; ++m)
            if (row[static_cast<std::size_t>(m)] < row[static_cast<std::size_t>(best)]) best = m;
        return {best, row[static_cast<std::size_t>(c.of(v))] - row[static_cast<std::size_t>(best)]};
    };

    std::set<Vertex> unhappy;
    for (Vertex v = 1; v <= n; ++v)
        if (strict_gain(v).second > 0) unhappy.insert(v);

    long long phi = trace.has_potential ? social_welfare(g, c) / 2 : 0;
    long long steps = 0;
    while (!unhappy.empty() && steps < max_steps) {
        Vertex v = *unhappy.begin();
        auto [target, gain] = strict_gain(v);
        Color old = c.of(v);
        c.of(v) = target;
        DynamicsStep step;
        step.vertex = v;
        step.old_color = old;
        step.new_color = target;
        if (trace.has_potential) {
            step.phi_before = phi;
            phi += gain;  // exact potential: the mover's payoff gain
            step.phi_after = phi;
        }
        trace.steps.push_back(step);
        ++steps;
        // Only v and its watchers can change happiness.
        for (Vertex w : watchers[static_cast<std::size_t>(v)]) {
            --cnt[static_cast<std::size_t>(w)][static_cast<std::size_t>(old)];
            ++cnt[static_cast<std::size_t>(w)][static_cast<std::size_t>(target)];
            if (strict_gain(w).second > 0) unhappy.insert(w); else unhappy.erase(w);
        }
        if (strict_gain(v).second > 0) unhappy.insert(v); else unhappy.erase(v);
    }

    trace.converged = unhappy.empty();
    trace.final = c;
    return trace;
}

inline DynamicsTrace run_dynamics(const Graph& g, int k, long long max_steps = -1) {
    return run_dynamics(g, k, uniform_coloring(g.n(), k), max_steps);
}

// One line per step: `s <vertex> <old> <new> <phi_before> <phi_after>`,
// with `-` in the phi fields for directed runs.
inline void write_trace(std::ostream& out, const DynamicsTrace& trace) {
    for (const auto& s : trace.steps) {
        out << "s " << s.vertex << ' ' << s.old_color << ' ' << s.new_color << ' ';
        if (trace.has_potential)
            out << s.phi_before << ' ' << s.phi_after << '\n';
        else
            out << "- -\n";
    }
}

}  // namespace acg
