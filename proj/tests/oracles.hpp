#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the library's counting-based code paths. Stability is
// decided straight from the definition: try every unilateral deviation and
// compare payoffs.

#include <optional>
#include <vector>

#include "acg/game.hpp"
#include "acg/graph.hpp"

namespace oracle {

inline long long payoff_of(const acg::Graph& g, const acg::Coloring& c, acg::Vertex v) {
    long long p = 0;
    for (acg::Vertex w : g.out(v)) p += c.of(w) != c.of(v);
    return p;
}

inline long long welfare_of(const acg::Graph& g, const acg::Coloring& c) {
    long long w = 0;
    for (acg::Vertex v = 1; v <= g.n(); ++v) w += payoff_of(g, c, v);
    return w;
}

inline long long properly_colored_edges(const acg::Graph& g, const acg::Coloring& c) {
    long long count = 0;
    for (auto [a, b] : acg::arc_list(g)) count += c.of(a) != c.of(b);
    return count;
}

// Stability by trying every unilateral deviation.
inline acg::Stability classify_by_deviation(const acg::Graph& g, const acg::Coloring& c) {
    bool any_equal_move = false;
    for (acg::Vertex v = 1; v <= g.n(); ++v) {
        long long current = payoff_of(g, c, v);
        acg::Coloring probe = c;
        for (acg::Color m = 1; m <= c.k; ++m) {
            if (m == c.of(v)) continue;
            probe.of(v) = m;
            long long moved = payoff_of(g, probe, v);
            if (moved > current) return acg::Stability::unstable;
            if (moved == current) any_equal_move = true;
        }
    }
    return any_equal_move ? acg::Stability::stable_nonstrict : acg::Stability::strictly_stable;
}

// Visits all k^n colorings (vertex 1 most significant).
template <typename Fn>
void for_each_coloring(int n, int k, Fn&& fn) {
    acg::Coloring c = acg::uniform_coloring(n, k);
    while (true) {
        fn(c);
        int pos = n;
        while (pos >= 1 && c.of(pos) == k) c.of(pos--) = 1;
        if (pos < 1) return;
        ++c.of(pos);
    }
}

// MAX-CUT by enumerating bipartitions; usable up to n ~ 20.
inline long long max_cut(const acg::Graph& g) {
    long long best = 0;
    int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long long cut = 0;
        for (auto [a, b] : acg::arc_list(g))
            cut += ((mask >> (a - 1)) & 1) != ((mask >> (b - 1)) & 1);
        best = std::max(best, cut);
    }
    return best;
}

}  // namespace oracle
