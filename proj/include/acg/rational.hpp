#pragma once

// Exact rational arithmetic for price-of-anarchy ratios. Floating point
// would corrupt tightness checks like 5/4, so ratios are kept as normalized
// integer fractions and compared by cross-multiplication.

#include <numeric>
#include <string>

#include "acg/graph.hpp"

namespace acg {

struct Rational {
    long long num = 0;
    long long den = 1;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

inline Rational make_rational(long long num, long long den) {
    if (den == 0) fail(Errc::bad_parameter, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

}  // namespace acg
