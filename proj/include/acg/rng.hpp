#pragma once

// Seeded randomness for reproducible experiments.
//
// The generator is splitmix64 (Steele, Lea, Flood 2014): pure 64-bit integer
// arithmetic, so a seed produces the same stream on every platform. Derived
// quantities (edge presence, colors) are computed with integer arithmetic
// only, never through floating-point distributions.

#include <cstdint>

#include "acg/graph.hpp"

namespace acg {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Value in [0, bound) by plain modulo; bias is below bound / 2^64.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// G(n, p): potential edges (a, b) with a < b are visited in lexicographic
// order, each consuming one draw; the edge is present iff
// draw % 1000000 < round(p * 1e6). p is quantized to millionths and the
// decision is integer-only, so a seed reproduces the same graph everywhere.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) fail(Errc::bad_parameter, "random graph needs at least one vertex");
    if (p < 0.0 || p > 1.0) fail(Errc::bad_parameter, "edge probability must be in [0,1]");
    auto ppm = static_cast<std::uint64_t>(p * 1e6 + 0.5);
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            if (rng.next() % 1000000 < ppm) arcs.emplace_back(a, b);
    return build_graph(n, false, arcs);
}

inline Coloring random_coloring(int n, int k, std::uint64_t seed) {
    if (k < 1) fail(Errc::bad_parameter, "need at least one color");
    SplitMix64 rng(seed);
    Coloring c = uniform_coloring(n, k);
    for (Vertex v = 1; v <= n; ++v) c.of(v) = static_cast<Color>(rng.below(k)) + 1;
    return c;
}

}  // namespace acg
