#pragma once

// Exhaustive and pruned search over colorings: equilibrium enumeration,
// maximum welfare, price of anarchy, and the independent brute-force oracles
// used to verify the hardness reductions (SAT, proper colorability, balanced
// unfriendly partition).
//
// Enumeration walks colorings in lexicographic order, viewing the assignment
// (c(1), ..., c(n)) as a base-k numeral with vertex 1 most significant.
// Budgets count colorings examined, not wall time.

#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

#include "acg/cnf.hpp"
#include "acg/game.hpp"
#include "acg/graph.hpp"
#include "acg/rational.hpp"

namespace acg {

enum class Mode { stable, strict };

inline constexpr std::uint64_t kDefaultBudget = 100000000;  // 10^8 colorings

namespace detail {

// 0-based CSR adjacency for the hot loops.
struct FlatGraph {
    int n = 0;
    std::vector<int> off;
    std::vector<int> nb;

    explicit FlatGraph(const Graph& g) : n(g.n()) {
        off.assign(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex v = 1; v <= n; ++v)
            off[static_cast<std::size_t>(v)] =
                off[static_cast<std::size_t>(v) - 1] + g.out_degree(v);
        nb.reserve(static_cast<std::size_t>(off[static_cast<std::size_t>(n)]));
        for (Vertex v = 1; v <= n; ++v)
            for (Vertex w : g.out(v)) nb.push_back(w - 1);
    }

    int deg(int v) const { return off[static_cast<std::size_t>(v) + 1] - off[static_cast<std::size_t>(v)]; }
};

// Saturating k^n, used for budget accounting.
inline std::uint64_t pow_saturating(std::uint64_t k, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > UINT64_MAX / k) return UINT64_MAX;
        r *= k;
    }
    return r;
}

// Evaluates one coloring: fills cnt (n*k zeroed scratch), returns welfare and
// stability status (0 unstable, 1 stable non-strict, 2 strictly stable).
struct Evaluation {
    long long welfare = 0;
    int status = 2;
};

inline Evaluation evaluate(const FlatGraph& fg, int k, const std::vector<std::uint8_t>& c,
                           std::vector<int>& cnt) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int v = 0; v < fg.n; ++v) {
        int* row = cnt.data() + static_cast<std::size_t>(v) * k;
        for (int i = fg.off[static_cast<std::size_t>(v)]; i < fg.off[static_cast<std::size_t>(v) + 1]; ++i)
            ++row[c[static_cast<std::size_t>(fg.nb[static_cast<std::size_t>(i)])]];
    }
    Evaluation ev;
    for (int v = 0; v < fg.n; ++v) {
        const int* row = cnt.data() + static_cast<std::size_t>(v) * k;
        int own = row[c[static_cast<std::size_t>(v)]];
        ev.welfare += fg.deg(v) - own;
        int min_other = INT32_MAX;
        for (int m = 0; m < k; ++m)
            if (m != c[static_cast<std::size_t>(v)]) min_other = std::min(min_other, row[m]);
        if (k == 1) min_other = own;  // no alternative color
        if (own > min_other)
            ev.status = 0;
        else if (own == min_other && ev.status == 2)
            ev.status = 1;
    }
    return ev;
}

// Calls fn(colors, welfare, status) for every coloring in lexicographic
// order; stops early when fn returns false. Enforces the evaluation budget.
template <typename Fn>
void scan_colorings(const Graph& g, int k, std::uint64_t budget, Fn&& fn) {
    if (k < 1) fail(Errc::bad_parameter, "need at least one color");
    std::uint64_t total = pow_saturating(static_cast<std::uint64_t>(k), g.n());
    if (total > budget)
        fail(Errc::budget_exceeded,
             "k^n = " + (total == UINT64_MAX ? std::string("more than 2^64")
                                             : std::to_string(total)) +
                 " colorings exceed the budget of " + std::to_string(budget));
    FlatGraph fg(g);
    std::vector<std::uint8_t> c(static_cast<std::size_t>(fg.n), 0);
    std::vector<int> cnt(static_cast<std::size_t>(fg.n) * k, 0);
    while (true) {
        Evaluation ev = evaluate(fg, k, c, cnt);
        if (!fn(c, ev.welfare, ev.status)) return;
        int pos = fg.n - 1;
        while (pos >= 0 && c[static_cast<std::size_t>(pos)] == k - 1) c[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return;
        ++c[static_cast<std::size_t>(pos)];
    }
}

inline Coloring to_coloring(const std::vector<std::uint8_t>& c, int k) {
    Coloring out;
    out.k = k;
    out.assignment.resize(c.size() + 1);
    out.assignment[0] = 0;
    for (std::size_t i = 0; i < c.size(); ++i) out.assignment[i + 1] = c[i] + 1;
    return out;
}

// A coloring is its color-permutation orbit's representative iff every color,
// at its first occurrence, equals the number of distinct colors seen so far.
inline bool is_orbit_representative(const std::vector<std::uint8_t>& c) {
    int next_new = 0;
    for (std::uint8_t x : c) {
        if (x > next_new) return false;
        if (x == next_new) ++next_new;
    }
    return true;
}

}  // namespace detail

// Exactly the colorings whose classification meets the mode, in lexicographic
// order. With orbit_representatives, one coloring per color-permutation orbit.
inline std::vector<Coloring> enumerate_stable(const Graph& g, int k, Mode mode,
                                              std::uint64_t budget = kDefaultBudget,
                                              bool orbit_representatives = false) {
    std::vector<Coloring> out;
    int need = mode == Mode::strict ? 2 : 1;
    detail::scan_colorings(g, k, budget,
                           [&](const std::vector<std::uint8_t>& c, long long, int status) {
                               if (status >= need &&
                                   (!orbit_representatives || detail::is_orbit_representative(c)))
                                   out.push_back(detail::to_coloring(c, k));
                               return true;
                           });
    return out;
}

// First qualifying coloring in lexicographic order, or nullopt after an
// exhaustive scan. Same semantics as enumerate_stable emptiness, cheaper when
// a witness exists.
inline std::optional<Coloring> find_stable_exhaustive(const Graph& g, int k, Mode mode,
                                                      std::uint64_t budget = kDefaultBudget) {
    std::optional<Coloring> found;
    int need = mode == Mode::strict ? 2 : 1;
    detail::scan_colorings(g, k, budget,
                           [&](const std::vector<std::uint8_t>& c, long long, int status) {
                               if (status >= need) {
                                   found = detail::to_coloring(c, k);
                                   return false;
                               }
                               return true;
                           });
    return found;
}

inline std::pair<long long, Coloring> max_welfare(const Graph& g, int k,
                                                  std::uint64_t budget = kDefaultBudget) {
    long long best = -1;
    Coloring witness;
    detail::scan_colorings(g, k, budget,
                           [&](const std::vector<std::uint8_t>& c, long long welfare, int) {
                               if (welfare > best) {
                                   best = welfare;
                                   witness = detail::to_coloring(c, k);
                               }
                               return true;
                           });
    return {best, witness};
}

struct PoaResult {
    long long max_welfare = 0;
    long long min_stable_welfare = 0;
    Rational ratio;
    Coloring best;          // welfare-maximizing coloring
    Coloring worst_stable;  // welfare-minimizing stable coloring
    std::uint64_t stable_count = 0;
};

// Exact price of anarchy over the fully enumerated stable set Q.
inline PoaResult price_of_anarchy(const Graph& g, int k, std::uint64_t budget = kDefaultBudget) {
    if (g.m() < 1) fail(Errc::bad_parameter, "price of anarchy needs at least one edge");
    PoaResult r;
    long long best = -1, worst_stable = -1;
    detail::scan_colorings(g, k, budget,
                           [&](const std::vector<std::uint8_t>& c, long long welfare, int status) {
                               if (welfare > best) {
                                   best = welfare;
                                   r.best = detail::to_coloring(c, k);
                               }
                               if (status >= 1) {
                                   ++r.stable_count;
                                   if (worst_stable < 0 || welfare < worst_stable) {
                                       worst_stable = welfare;
                                       r.worst_stable = detail::to_coloring(c, k);
                                   }
                               }
                               return true;
                           });
    if (r.stable_count == 0)
        fail(Errc::no_equilibrium, "graph admits no stable " + std::to_string(k) + "-coloring");
    // With m >= 1 the pigeonhole bound keeps every equilibrium's welfare
    // positive, so the ratio is well defined.
    if (worst_stable <= 0) fail(Errc::bad_parameter, "zero-welfare equilibrium is impossible with m >= 1");
    r.max_welfare = best;
    r.min_stable_welfare = worst_stable;
    r.ratio = make_rational(best, worst_stable);
    return r;
}

// ---------------------------------------------------------------------------
// Pruned complete search for a stable / strictly stable coloring.
//
// Backtracks over vertices in descending-degree order. A colored vertex v
// with U uncolored out-neighbors can still end up stable only if
//   cnt[c(v)] <= cnt[m] + U   for every color m
// (strictly less, for m != c(v), in strict mode); assignments violating the
// bound for the vertex or any colored in-neighbor are cut. After each
// assignment, neighbors whose remaining color set shrinks to one are forced,
// which collapses pendant and connector chains without branching.

namespace detail {

class StableSearch {
public:
    StableSearch(const Graph& g, int k, Mode mode)
        : n_(g.n()), k_(k), strict_(mode == Mode::strict) {
        out_.resize(static_cast<std::size_t>(n_));
        in_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 1; v <= g.n(); ++v)
            for (Vertex w : g.out(v)) {
                out_[static_cast<std::size_t>(v - 1)].push_back(w - 1);
                in_[static_cast<std::size_t>(w - 1)].push_back(v - 1);
            }
        color_.assign(static_cast<std::size_t>(n_), -1);
        cnt_.assign(static_cast<std::size_t>(n_) * k_, 0);
        uncolored_out_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            uncolored_out_[static_cast<std::size_t>(v)] =
                static_cast<int>(out_[static_cast<std::size_t>(v)].size());
        order_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            auto da = out_[static_cast<std::size_t>(a)].size() + in_[static_cast<std::size_t>(a)].size();
            auto db = out_[static_cast<std::size_t>(b)].size() + in_[static_cast<std::size_t>(b)].size();
            return da != db ? da > db : a < b;
        });
    }

    std::optional<Coloring> run() {
        if (strict_)
            for (int v = 0; v < n_; ++v)
                if (out_[static_cast<std::size_t>(v)].empty()) return std::nullopt;  // can always deviate freely
        if (!dfs(0)) return std::nullopt;
        Coloring c;
        c.k = k_;
        c.assignment.resize(static_cast<std::size_t>(n_) + 1);
        c.assignment[0] = 0;
        for (int v = 0; v < n_; ++v)
            c.assignment[static_cast<std::size_t>(v) + 1] = color_[static_cast<std::size_t>(v)] + 1;
        return c;
    }

private:
    int* row(int v) { return cnt_.data() + static_cast<std::size_t>(v) * k_; }

    // Can colored vertex v still satisfy the mode, given row adjustments
    // (extra on color em, du fewer uncolored out-neighbors)?
    bool feasible_adjusted(int v, int em, int du) {
        int c = color_[static_cast<std::size_t>(v)];
        const int* r = row(v);
        int u = uncolored_out_[static_cast<std::size_t>(v)] - du;
        int own = r[c] + (em == c);
        for (int m = 0; m < k_; ++m) {
            if (m == c) continue;
            int cm = r[m] + (em == m) + u;
            if (strict_ ? own >= cm : own > cm) return false;
        }
        return true;
    }

    bool can_take(int v, int m) {
        color_[static_cast<std::size_t>(v)] = m;
        bool ok = feasible_adjusted(v, -1, 0);
        color_[static_cast<std::size_t>(v)] = -1;
        if (!ok) return false;
        for (int z : in_[static_cast<std::size_t>(v)])
            if (color_[static_cast<std::size_t>(z)] >= 0 && !feasible_adjusted(z, m, 1)) return false;
        return true;
    }

    void assign(int v, int m) {
        color_[static_cast<std::size_t>(v)] = m;
        for (int z : in_[static_cast<std::size_t>(v)]) {
            ++row(z)[m];
            --uncolored_out_[static_cast<std::size_t>(z)];
        }
        trail_.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            int m = color_[static_cast<std::size_t>(v)];
            color_[static_cast<std::size_t>(v)] = -1;
            for (int z : in_[static_cast<std::size_t>(v)]) {
                --row(z)[m];
                ++uncolored_out_[static_cast<std::size_t>(z)];
            }
        }
    }

    // Forces singleton-domain vertices around the last assignment; returns
    // false on a wipeout.
    bool propagate(int start) {
        std::vector<int> queue = {start};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[static_cast<std::size_t>(qi)];
            for (const auto& side : {&in_, &out_}) {
                for (int u : (*side)[static_cast<std::size_t>(v)]) {
                    if (color_[static_cast<std::size_t>(u)] >= 0) continue;
                    int choices = 0, only = -1;
                    for (int m = 0; m < k_ && choices < 2; ++m)
                        if (can_take(u, m)) {
                            ++choices;
                            only = m;
                        }
                    if (choices == 0) return false;
                    if (choices == 1) {
                        assign(u, only);
                        queue.push_back(u);
                    }
                }
            }
        }
        return true;
    }

    bool dfs(std::size_t pos) {
        while (pos < order_.size() && color_[static_cast<std::size_t>(order_[pos])] >= 0) ++pos;
        if (pos == order_.size()) return true;
        int v = order_[pos];
        for (int m = 0; m < k_; ++m) {
            if (!can_take(v, m)) continue;
            std::size_t mark = trail_.size();
            assign(v, m);
            if (propagate(v) && dfs(pos + 1)) return true;
            undo_to(mark);
        }
        return false;
    }

    int n_;
    int k_;
    bool strict_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> color_;
    std::vector<int> cnt_;
    std::vector<int> uncolored_out_;
    std::vector<int> order_;
    std::vector<int> trail_;
};

}  // namespace detail

// A coloring meeting the mode if one exists. The search is complete: a
// nullopt result certifies nonexistence.
inline std::optional<Coloring> search_stable(const Graph& g, int k, Mode mode) {
    if (k < 1) fail(Errc::bad_parameter, "need at least one color");
    detail::StableSearch search(g, k, mode);
    return search.run();
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

inline constexpr int kSatMaxVars = 24;

inline std::optional<Assignment> sat_brute_force(const Cnf& f) {
    validate_cnf(f);
    if (f.num_vars > kSatMaxVars)
        fail(Errc::too_many_variables, "brute-force SAT is capped at " +
                                           std::to_string(kSatMaxVars) + " variables, got " +
                                           std::to_string(f.num_vars));
    std::uint64_t total = 1ULL << f.num_vars;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Assignment a(static_cast<std::size_t>(f.num_vars) + 1, false);
        for (int v = 1; v <= f.num_vars; ++v) a[static_cast<std::size_t>(v)] = (mask >> (v - 1)) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

// Complete backtracking search for a proper k-coloring (no monochromatic
// edge) of an undirected graph.
inline std::optional<Coloring> proper_colorable(const Graph& g, int k) {
    if (g.directed()) fail(Errc::directed_unsupported, "proper coloring is defined on undirected graphs");
    if (k < 1) fail(Errc::bad_parameter, "need at least one color");
    int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<Color> color(static_cast<std::size_t>(n) + 1, 0);
    auto dfs = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        Vertex v = order[pos];
        for (Color m = 1; m <= k; ++m) {
            bool clash = false;
            for (Vertex w : g.out(v))
                if (color[static_cast<std::size_t>(w)] == m) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = m;
            if (self(self, pos + 1)) return true;
            color[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    Coloring c;
    c.k = k;
    c.assignment = color;
    return c;
}

inline constexpr int kBalancedMaxVertices = 24;

// Exhaustive search for an equal-halves bipartition where every vertex has at
// least as many neighbors across as on its own side. Returned as a 2-coloring
// (side 1 / side 2); vertex 1 is pinned to side 1 since sides are symmetric.
inline std::optional<Coloring> balanced_unfriendly_exists(const Graph& g) {
    if (g.directed()) fail(Errc::directed_unsupported, "balanced unfriendly partition is defined on undirected graphs");
    if (g.n() % 2 != 0) fail(Errc::odd_order, "balanced partition needs an even vertex count");
    if (g.n() > kBalancedMaxVertices)
        fail(Errc::too_large, "exhaustive balanced partition search is capped at " +
                                  std::to_string(kBalancedMaxVertices) + " vertices");
    int n = g.n(), half = n / 2;
    std::vector<char> side(static_cast<std::size_t>(n) + 1, 2);
    side[1] = 1;
    auto unfriendly = [&]() {
        for (Vertex v = 1; v <= n; ++v) {
            int same = 0, cross = 0;
            for (Vertex w : g.out(v)) (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)] ? same : cross)++;
            if (cross < same) return false;
        }
        return true;
    };
    // Choose the remaining half-1 members of side 1 from {2..n}, ascending.
    std::vector<Vertex> chosen;
    auto dfs = [&](auto&& self, Vertex next, int left) -> bool {
        if (left == 0) return unfriendly();
        if (n - next + 1 < left) return false;
        for (Vertex v = next; v <= n; ++v) {
            side[static_cast<std::size_t>(v)] = 1;
            if (self(self, v + 1, left - 1)) return true;
            side[static_cast<std::size_t>(v)] = 2;
        }
        return false;
    };
    if (n == 0) return std::nullopt;
    if (!dfs(dfs, 2, half - 1)) return std::nullopt;
    Coloring c;
    c.k = 2;
    c.assignment.assign(side.begin(), side.end());
    c.assignment[0] = 0;
    return c;
}

}  // namespace acg
