#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace treecolor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---- binomials ----

// C(n, k) for integer n >= 0, by the multiplicative formula.
inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && Int(k) > n) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// C(top, k) for rational top: top(top-1)...(top-k+1)/k!.
inline Rat binom_rational(const Rat& top, long k) {
    if (k < 0) return 0;
    Rat acc = 1;
    for (long i = 0; i < k; ++i) acc *= (top - i) / Rat(i + 1);
    return acc;
}

inline Int catalan(long n) {
    if (n < 0) return 0;
    return binomial(Int(2 * n), n) / (n + 1);
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Exact quotient of two integers that must divide evenly.
inline Int exact_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (q * den != num) throw std::domain_error("exact_div: not divisible");
    return q;
}

// A rational that is asserted to be an integer (never rounded).
inline Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1) throw std::domain_error("rat_to_int: not integral");
    return numerator(r);
}

}  // namespace treecolor
