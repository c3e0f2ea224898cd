#pragma once

#include "treecolor/counting.hpp"
#include "treecolor/matrix.hpp"
#include "treecolor/numeric.hpp"
#include "treecolor/polynomial.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- named sequences ----

inline Int narayana(long n, long k) {
    return binomial(Int(n), k) * binomial(Int(n), k - 1) / n;
}

inline Int fibonacci(long n) {
    if (n <= 0) return 0;
    Int a = 0, b = 1;
    for (long i = 1; i < n; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return b;
}

// R_n = sum_{k=1}^n N_{n,k} 2^k for n >= 1; R_0 = 1.
inline Int schroder_large(long n) {
    if (n <= 0) return 1;
    Int acc = 0;
    for (long k = 1; k <= n; ++k) acc += narayana(n, k) * int_pow(2, k);
    return acc;
}

// R_n = 2 r_n for n >= 1; r_0 = 1.
inline Int schroder_little(long n) {
    if (n <= 0) return 1;
    return exact_div(schroder_large(n), 2);
}

// Nonempty-antichain counts, defined operationally: D_n is the root-color-1
// count of [[1,1],[0,1]] (D_1 = 1, D_2 = 2, D_3 = 7, ...).
inline Int antichain_D(long n) {
    if (n < 1) return 0;
    static const Matrix A = parse_matrix("11;01");
    return count_by_root(A, int(n)).t(1, int(n));
}

struct NamedSequence {
    std::string name;
    std::function<Int(long)> evaluator;        // one-parameter families
    std::function<Int(long, long)> evaluator2; // narayana N_{n,k}
};

inline NamedSequence named_sequence(const std::string& name) {
    if (name == "C") return {name, [](long n) { return catalan(n); }, nullptr};
    if (name == "N") return {name, nullptr, [](long n, long k) { return narayana(n, k); }};
    if (name == "F") return {name, [](long n) { return fibonacci(n); }, nullptr};
    if (name == "R") return {name, [](long n) { return schroder_large(n); }, nullptr};
    if (name == "r") return {name, [](long n) { return schroder_little(n); }, nullptr};
    if (name == "D") return {name, [](long n) { return antichain_D(n); }, nullptr};
    throw std::invalid_argument("named_sequence: unknown name " + name);
}

// ---- closed-form formula evaluation ----

struct FormulaParams {
    long l = 0;
    long m = 0;
    long n = 0;
};

// Exact integer evaluation; rational intermediates must reduce to integers
// (asserted, never rounded).
inline Int eval_formula(const std::string& which, const FormulaParams& P) {
    const long l = P.l, m = P.m, n = P.n;
    if (which == "indsets") {
        // (2/n) C(3n-3, n-1)
        return rat_to_int(Rat(2, n) * Rat(binomial(Int(3 * n - 3), n - 1)));
    }
    if (which == "k-plane") {
        // (m/n) C((m+1)(n-1), n-1)
        return rat_to_int(Rat(m, n) * Rat(binomial(Int((m + 1) * (n - 1)), n - 1)));
    }
    if (which == "schroder") return schroder_large(n);
    if (which == "family1") {
        if (n == 1) return l + m;
        Int acc = 0;
        for (long k = 1; k <= n - 1; ++k)
            acc += narayana(n - 1, k) * int_pow(l, n - k) * int_pow(l + m, k);
        return acc;
    }
    if (which == "family2") {
        if (n == 1) return l + m;
        Rat s = 0;
        for (long k = 0; k <= n - 1; ++k)
            s += Rat(2, n) * Rat(binomial(Int(n), k) * binomial(Int(2 * n - 3), n - k - 1) *
                                 int_pow(l, n - k) * int_pow(m, k));
        return rat_to_int(s);
    }
    if (which == "family2-root-low") {
        if (n == 1) return 1;
        Rat s = 0;
        for (long k = 0; k <= n - 1; ++k)
            s += Rat(1, n) * Rat(binomial(Int(n), k) * binomial(Int(2 * n - 2), n - k - 1) *
                                 int_pow(l, n - k - 1) * int_pow(m, k));
        return rat_to_int(s);
    }
    if (which == "family2-root-high") {
        if (n == 1) return 1;
        Rat s = 0;
        for (long k = 1; k <= n - 1; ++k)
            s += Rat(1, n - 1) * Rat(binomial(Int(n - 1), k - 1) *
                                     binomial(Int(2 * n - 2), n - k - 1) * int_pow(l, n - k) *
                                     int_pow(m, k - 1));
        return rat_to_int(s);
    }
    if (which == "family2-alt-root-low") {
        Rat s = 0;
        for (long k = 1; k <= n; ++k)
            s += Rat(1, n) * Rat(int_pow(Int(m - l), n - k) * int_pow(l, k - 1) *
                                 binomial(Int(n), k) * binomial(Int(2 * n + k - 2), k - 1));
        return rat_to_int(s);
    }
    if (which == "family2-alt-root-high") {
        if (n == 1) return 1;
        Rat s = 0;
        for (long k = 1; k <= n - 1; ++k)
            s += Rat(1, n - 1) * Rat(int_pow(Int(m - l), n - k - 1) * int_pow(l, k) *
                                     binomial(Int(n - 1), k) * binomial(Int(2 * n + k - 2), k - 1));
        return rat_to_int(s);
    }
    if (which == "family2-alt") {
        if (n == 1) return l + m;
        // The k = n summand carries (m-l)^{-1} against a numerator factor
        // (m-l)(n-1); split it off in cancelled form so l = m evaluates
        // cleanly.
        Rat s = 0;
        for (long k = 1; k <= n - 1; ++k)
            s += Rat((2 * m - l) * n - m * k + (l - m), n * (n - 1)) *
                 Rat(int_pow(Int(m - l), n - k - 1) * int_pow(l, k) * binomial(Int(n), k) *
                     binomial(Int(2 * n + k - 2), k - 1));
        s += Rat(int_pow(l, n) * binomial(Int(3 * n - 2), n - 1), n);
        return rat_to_int(s);
    }
    if (which == "family2-alt2-root-low") {
        Rat s = 0;
        for (long k = 0; k <= n - 1; ++k)
            s += Rat(1, n) * Rat(int_pow(Int(l - m), k) * int_pow(m, n - k - 1) *
                                 binomial(Int(2 * n - 2), k) *
                                 binomial(Int(3 * n - k - 2), n - k - 1));
        return rat_to_int(s);
    }
    if (which == "family2-alt2-root-high") {
        if (n == 1) return 1;
        Rat s = 0;
        for (long k = 0; k <= n - 2; ++k)
            s += Rat(l, n - 1) * Rat(int_pow(Int(l - m), k) * int_pow(m, n - k - 2) *
                                     binomial(Int(2 * n - 2), k) *
                                     binomial(Int(3 * n - k - 3), n - k - 2));
        return rat_to_int(s);
    }
    if (which == "family2-alt2") {
        if (n == 1) return l + m;
        Rat s = 0;
        for (long k = 0; k <= n - 1; ++k)
            s += Rat(2 * l, n) * Rat(int_pow(Int(l - m), k) * int_pow(m, n - k - 1) *
                                     binomial(Int(2 * n - 3), k) *
                                     binomial(Int(3 * n - k - 3), n - k - 1));
        return rat_to_int(s);
    }
    if (which == "family3") {
        if (n == 1) return m;
        return int_pow(2, n - 1) + m - 3;
    }
    if (which == "family4") {
        // (l/n) 2^{2n-1} C((l+1)n/2 - l/2 - 1, n-1)
        Rat top = Rat(l + 1, 2) * n - Rat(l, 2) - 1;
        Rat v = Rat(l, n) * Rat(int_pow(2, 2 * n - 1)) * binom_rational(top, n - 1);
        return rat_to_int(v);
    }
    if (which == "entry34") {
        return rat_to_int(Rat(7 * n - 4, n * (2 * n - 1)) * Rat(binomial(Int(3 * n - 3), n - 1)));
    }
    if (which == "entry40") {
        return rat_to_int(Rat(5 * n - 2, n * (2 * n - 1)) * Rat(binomial(Int(3 * n - 3), n - 1)));
    }
    if (which == "entry54-root1") {
        return rat_to_int(Rat(3, 4 * n - 1) * Rat(binomial(Int(4 * n - 1), n - 1)));
    }
    if (which == "entry54-root2") {
        return rat_to_int(Rat(2, 3 * n - 1) * Rat(binomial(Int(4 * n - 3), n - 1)));
    }
    if (which == "entry54-root3") {
        // Equals (1/(n-1)) C(4n-4, n-2) for n >= 2; this form also covers n = 1.
        return rat_to_int(Rat(1, 4 * n - 3) * Rat(binomial(Int(4 * n - 3), n - 1)));
    }
    throw std::invalid_argument("eval_formula: unknown formula id " + which);
}

// ---- the binomial-sum identity ----

// sum_{k=0}^{n} C(2n-k, n-k) (-2)^k C(x, k) = 4^n C(n - (x+1)/2, n),
// checked in exact rational arithmetic.
inline bool verify_hyper_identity(long n, const Rat& x) {
    Rat lhs = 0;
    for (long k = 0; k <= n; ++k) {
        Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
        lhs += Rat(binomial(Int(2 * n - k), n - k)) * sign * Rat(int_pow(2, k)) *
               binom_rational(x, k);
    }
    Rat rhs = Rat(int_pow(4, n)) * binom_rational(Rat(n) - (x + 1) / 2, n);
    return lhs == rhs;
}

// ---- univariate integer polynomials (coefficient lists, constant first) ----

using IntPoly = std::vector<Int>;

namespace detail {

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

inline IntPoly poly_trim(IntPoly a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace detail

// ---- Family 5: rational generating functions ----

// p_1 = x, q_1 = 1; p_m = p_{m-1} q_{m-1}, q_m = q_{m-1}^2 - p_{m-1}^2 / x.
// S_1 = x, T_1 = 1; S_m = S_{m-1}^2 - T_{m-1}^2, T_m = S_{m-1} T_{m-1};
// p_m(x^2) = -x T_m(x) and q_m(x^2) = S_m(x) for m >= 3.
struct Family5Polys {
    IntPoly p, q, S, T;
};

inline Family5Polys family5_polys(int m) {
    if (m < 1) throw std::invalid_argument("family5_polys: m must be >= 1");
    IntPoly p{0, 1}, q{1};
    IntPoly S{0, 1}, T{1};
    for (int step = 1; step < m; ++step) {
        IntPoly p2 = detail::poly_mul(p, p);
        if (p2[0] != 0) throw std::logic_error("family5_polys: p^2 not divisible by x");
        IntPoly p2_div_x(p2.begin() + 1, p2.end());
        IntPoly np = detail::poly_mul(p, q);
        IntPoly nq = detail::poly_sub(detail::poly_mul(q, q), p2_div_x);
        p = detail::poly_trim(np);
        q = detail::poly_trim(nq);
        IntPoly nS = detail::poly_sub(detail::poly_mul(S, S), detail::poly_mul(T, T));
        IntPoly nT = detail::poly_mul(S, T);
        S = detail::poly_trim(nS);
        T = detail::poly_trim(nT);
    }
    return {p, q, S, T};
}

// ---- Family 6: algebraic relations via square-root bookkeeping ----

// P_1 = x, Q_1 = 1; P_m = P_{m-1}^2 + Q_{m-1}^2, Q_m = P_{m-1} Q_{m-1}.
struct Family6Polys {
    IntPoly P, Q;
    BivariatePolynomial relation;
};

inline Family6Polys family6_polys(int m) {
    if (m < 1) throw std::invalid_argument("family6_polys: m must be >= 1");
    IntPoly P{0, 1}, Q{1};
    for (int step = 1; step < m + 1; ++step) {  // build P_{m+1}, Q_{m+1}
        IntPoly nP = detail::poly_add(detail::poly_mul(P, P), detail::poly_mul(Q, Q));
        IntPoly nQ = detail::poly_mul(P, Q);
        P = detail::poly_trim(nP);
        Q = detail::poly_trim(nQ);
    }
    // Expand x^{2^{m-1}} ((1/s) Q_{m+1}(F/s) - P_{m+1}(F/s)) with s^2 = x:
    // the q_j term lands at s^{2^m - j - 1}, the p_j term at s^{2^m - j};
    // every surviving exponent of s must be even.
    Family6Polys out;
    long E = 1;
    for (int i = 0; i < m; ++i) E *= 2;
    for (size_t j = 0; j < Q.size(); ++j) {
        if (Q[j] == 0) continue;
        long e = E - long(j) - 1;
        if (e < 0 || e % 2 != 0)
            throw std::logic_error("family6_polys: odd power of sqrt(x) from Q");
        out.relation.add_term(int(j), int(e / 2), Q[j]);
    }
    for (size_t j = 0; j < P.size(); ++j) {
        if (P[j] == 0) continue;
        long e = E - long(j);
        if (e < 0 || e % 2 != 0)
            throw std::logic_error("family6_polys: odd power of sqrt(x) from P");
        out.relation.add_term(int(j), int(e / 2), -P[j]);
    }
    // The P_m, Q_m pair itself (one fewer recursion step).
    IntPoly Pm{0, 1}, Qm{1};
    for (int step = 1; step < m; ++step) {
        IntPoly nP = detail::poly_add(detail::poly_mul(Pm, Pm), detail::poly_mul(Qm, Qm));
        IntPoly nQ = detail::poly_mul(Pm, Qm);
        Pm = detail::poly_trim(nP);
        Qm = detail::poly_trim(nQ);
    }
    out.P = Pm;
    out.Q = Qm;
    return out;
}

}  // namespace treecolor
