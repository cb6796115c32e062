#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "acg/game.hpp"
#include "acg/graph.hpp"
#include "acg/reductions.hpp"
#include "acg/rng.hpp"
#include "acg/search.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

Graph directed_3cycle() { return build_graph(3, true, {{1, 2}, {2, 3}, {3, 1}}); }

Graph random_digraph(int n, SplitMix64& rng) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = 1; b <= n; ++b)
            if (a != b && rng.below(2)) arcs.emplace_back(a, b);
    return build_graph(n, true, arcs);
}

}  // namespace

TEST_CASE("enumerate_stable on the documented examples") {
    CHECK(enumerate_stable(directed_3cycle(), 2, Mode::stable).empty());

    auto strict_k2 = enumerate_stable(complete_graph(2), 2, Mode::strict);
    REQUIRE(strict_k2.size() == 2);
    CHECK(strict_k2[0] == make_coloring(2, {1, 2}));
    CHECK(strict_k2[1] == make_coloring(2, {2, 1}));

    // the triangle's stable 2-colorings are exactly the six 2-1 splits
    auto tri = enumerate_stable(complete_graph(3), 2, Mode::stable);
    CHECK(tri.size() == 6);
    for (const auto& c : tri) {
        int ones = 0;
        for (Vertex v = 1; v <= 3; ++v) ones += c.of(v) == 1;
        CHECK((ones == 1 || ones == 2));
    }
}

TEST_CASE("enumeration is lexicographic and matches the deviation oracle") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        bool directed = rng.below(2) == 1;
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = directed ? random_digraph(n, rng) : random_graph(n, 0.5, rng.next());
        int k = 2 + static_cast<int>(rng.below(2));
        for (Mode mode : {Mode::stable, Mode::strict}) {
            auto got = enumerate_stable(g, k, mode);
            std::vector<Coloring> expected;
            oracle::for_each_coloring(n, k, [&](const Coloring& c) {
                auto s = oracle::classify_by_deviation(g, c);
                bool keep = mode == Mode::strict ? s == Stability::strictly_stable
                                                 : s != Stability::unstable;
                if (keep) expected.push_back(c);
            });
            CHECK(got == expected);  // oracle enumerates in the same lexicographic order
        }
    }
}

TEST_CASE("strict enumeration is contained in stable enumeration") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(6)), 0.5, rng.next());
        auto stable = enumerate_stable(g, 2, Mode::stable);
        auto strict = enumerate_stable(g, 2, Mode::strict);
        std::set<std::vector<Color>> stable_set;
        for (const auto& c : stable) stable_set.insert(c.assignment);
        for (const auto& c : strict) CHECK(stable_set.count(c.assignment) == 1);
    }
}

TEST_CASE("the stable set is closed under color permutations") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(5)), 0.5, rng.next());
        int k = 3;
        auto stable = enumerate_stable(g, k, Mode::stable);
        std::set<std::vector<Color>> q;
        for (const auto& c : stable) q.insert(c.assignment);
        for (const auto& c : stable) {
            Coloring swapped = c;  // transposition (1 2) generates enough with closure checked per element
            for (Vertex v = 1; v <= g.n(); ++v)
                swapped.of(v) = c.of(v) == 1 ? 2 : c.of(v) == 2 ? 1 : c.of(v);
            CHECK(q.count(swapped.assignment) == 1);
        }
    }
}

TEST_CASE("orbit representatives cover the stable set exactly once") {
    Graph g = complete_graph(3);
    auto all = enumerate_stable(g, 2, Mode::stable);
    auto reps = enumerate_stable(g, 2, Mode::stable, kDefaultBudget, true);
    CHECK(all.size() == 6);
    CHECK(reps.size() == 3);
    for (const auto& r : reps) CHECK(r.of(1) == 1);  // canonical form starts with color 1
}

TEST_CASE("enumerate_stable enforces its budget") {
    Graph g = random_graph(30, 0.2, 9);
    CHECK_THROWS_WITH_AS(enumerate_stable(g, 2, Mode::stable, 1000),
                         doctest::Contains("1073741824"), Error);
}

TEST_CASE("search_stable agrees with exhaustive enumeration") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        bool directed = rng.below(2) == 1;
        int n = 2 + static_cast<int>(rng.below(6));
        Graph g = directed ? random_digraph(n, rng) : random_graph(n, 0.5, rng.next());
        int k = 2 + static_cast<int>(rng.below(2));
        for (Mode mode : {Mode::stable, Mode::strict}) {
            auto found = search_stable(g, k, mode);
            auto all = enumerate_stable(g, k, mode);
            CHECK(found.has_value() == !all.empty());
            if (found) {
                auto overall = classify(g, *found).overall;
                if (mode == Mode::strict)
                    CHECK(overall == Stability::strictly_stable);
                else
                    CHECK(overall != Stability::unstable);
            }
        }
    }
}

TEST_CASE("search_stable on the documented examples") {
    CHECK_FALSE(search_stable(directed_3cycle(), 2, Mode::stable).has_value());
    CHECK(search_stable(complete_graph(2), 2, Mode::stable).has_value());

    Graph path = build_graph(3, false, {{1, 2}, {2, 3}});
    auto strict = search_stable(path, 2, Mode::strict);
    REQUIRE(strict.has_value());
    CHECK(strict->of(1) == strict->of(3));
    CHECK(strict->of(2) != strict->of(1));
}

TEST_CASE("find_stable_exhaustive matches search_stable") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(6)), 0.5, rng.next());
        for (Mode mode : {Mode::stable, Mode::strict})
            CHECK(find_stable_exhaustive(g, 2, mode).has_value() ==
                  search_stable(g, 2, mode).has_value());
    }
}

TEST_CASE("max_welfare") {
    auto [w_c4, c_c4] = max_welfare(cycle_graph(4), 2);
    CHECK(w_c4 == 8);
    CHECK(social_welfare(cycle_graph(4), c_c4) == 8);

    auto [w_k3, c_k3] = max_welfare(complete_graph(3), 2);
    CHECK(w_k3 == 4);

    auto inst = poa_tight_instance(3);
    CHECK(max_welfare(inst.graph, 3).first == 2 * inst.graph.m());
}

TEST_CASE("max_welfare equals twice MAX-CUT for k = 2") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(9)), 0.5, rng.next());
        CHECK(max_welfare(g, 2).first == 2 * oracle::max_cut(g));
    }
}

TEST_CASE("price_of_anarchy on the tight family and K_2") {
    auto k2inst = poa_tight_instance(2);
    PoaResult r2 = price_of_anarchy(k2inst.graph, 2);
    CHECK(r2.ratio == make_rational(2, 1));
    CHECK(r2.max_welfare == 8);
    CHECK(r2.min_stable_welfare == 4);

    PoaResult k2 = price_of_anarchy(complete_graph(2), 2);
    CHECK(k2.ratio == make_rational(1, 1));
    CHECK(k2.max_welfare == k2.min_stable_welfare);

    CHECK_THROWS_AS(price_of_anarchy(directed_3cycle(), 2), Error);
    CHECK_THROWS_AS(price_of_anarchy(build_graph(2, false, {}), 2), Error);
}

TEST_CASE("dynamics never lands below the worst equilibrium") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng.below(5)), 0.6, rng.next());
        if (g.m() < 1) continue;
        int k = 2 + static_cast<int>(rng.below(2));
        PoaResult poa = price_of_anarchy(g, k);
        DynamicsTrace trace = run_dynamics(g, k, random_coloring(g.n(), k, rng.next()));
        REQUIRE(trace.converged);
        CHECK(social_welfare(g, trace.final) >= poa.min_stable_welfare);
        CHECK(social_welfare(g, trace.final) <= poa.max_welfare);
    }
}

TEST_CASE("sat_brute_force") {
    CHECK(sat_brute_force(make_cnf(3, {{1, 2, -3}})).has_value());
    CHECK_FALSE(sat_brute_force(make_cnf(1, {{1, 1, 1}, {-1, -1, -1}})).has_value());
    // all eight sign patterns over three variables exclude every assignment
    Cnf all8 = make_cnf(3, {{1, 2, 3},
                            {-1, 2, 3},
                            {1, -2, 3},
                            {1, 2, -3},
                            {-1, -2, 3},
                            {-1, 2, -3},
                            {1, -2, -3},
                            {-1, -2, -3}});
    CHECK_FALSE(sat_brute_force(all8).has_value());

    auto witness = sat_brute_force(make_cnf(3, {{1, 2, 3}, {-1, -2, -3}}));
    REQUIRE(witness.has_value());
    CHECK(satisfies(make_cnf(3, {{1, 2, 3}, {-1, -2, -3}}), *witness));

    Cnf big;
    big.num_vars = 25;
    CHECK_THROWS_AS(sat_brute_force(big), Error);
}

TEST_CASE("dimacs cnf parsing") {
    Cnf f = parse_dimacs_cnf("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0].lits[1] == Literal{2, true});
    CHECK(parse_dimacs_cnf(cnf_to_string(f)) == f);

    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), Error);        // only two literals
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 2\n1 2 2 0\n"), Error);      // clause count mismatch
    CHECK_THROWS_AS(parse_dimacs_cnf("1 2 3 0\n"), Error);                 // missing header
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"), Error);      // variable out of range
}

TEST_CASE("proper_colorable") {
    CHECK(proper_colorable(complete_graph(3), 3).has_value());
    CHECK_FALSE(proper_colorable(complete_graph(4), 3).has_value());
    CHECK_FALSE(proper_colorable(cycle_graph(5), 2).has_value());
    auto c = proper_colorable(cycle_graph(5), 3);
    REQUIRE(c.has_value());
    for (auto [a, b] : arc_list(cycle_graph(5))) CHECK(c->of(a) != c->of(b));
    CHECK_THROWS_AS(proper_colorable(directed_3cycle(), 3), Error);
}

TEST_CASE("balanced_unfriendly_exists") {
    auto k4 = balanced_unfriendly_exists(complete_graph(4));
    REQUIRE(k4.has_value());
    int side1 = 0;
    for (Vertex v = 1; v <= 4; ++v) side1 += k4->of(v) == 1;
    CHECK(side1 == 2);

    Graph star = build_graph(4, false, {{1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(balanced_unfriendly_exists(star).has_value());

    CHECK(balanced_unfriendly_exists(complete_graph(2)).has_value());

    CHECK_THROWS_AS(balanced_unfriendly_exists(complete_graph(3)), Error);
    CHECK_THROWS_AS(balanced_unfriendly_exists(random_graph(26, 0.5, 1)), Error);
    CHECK_THROWS_AS(balanced_unfriendly_exists(build_graph(2, true, {{1, 2}})), Error);
}

TEST_CASE("balanced partitions found are actually unfriendly") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 * (1 + static_cast<int>(rng.below(4)));
        Graph g = random_graph(n, 0.5, rng.next());
        auto part = balanced_unfriendly_exists(g);
        if (!part) continue;
        for (Vertex v = 1; v <= n; ++v) {
            int same = 0, cross = 0;
            for (Vertex w : g.out(v)) (part->of(w) == part->of(v) ? same : cross)++;
            CHECK(cross >= same);
        }
    }
}
