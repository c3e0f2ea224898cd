#pragma once

#include "treecolor/numeric.hpp"

#include <boost/integer/common_factor.hpp>

#include <optional>
#include <set>
#include <vector>

namespace treecolor {

// ---- hypergeometric guessing ----

// q(n) a(n) = p(n) a(n-1) for all n >= valid_from; gcd-normalized, leading
// coefficient of q positive.  Input terms are a(1), a(2), ...
struct HypergeometricGuess {
    std::vector<Int> p, q;  // coefficient lists, constant term first
    int valid_from = 0;
};

namespace detail {

inline Int eval_int_poly(const std::vector<Int>& coeffs, long n) {
    Int acc = 0, pw = 1;
    for (const auto& co : coeffs) {
        acc += co * pw;
        pw *= n;
    }
    return acc;
}

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Integer basis vectors of the rational nullspace of a homogeneous row
// system, one per free column, via Gauss-Jordan elimination.
inline std::vector<std::vector<Int>> nullspace_basis(std::vector<std::vector<Rat>> M) {
    std::vector<std::vector<Int>> out;
    if (M.empty()) return out;
    size_t ncol = M[0].size();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < ncol; ++c) {
        size_t pr = SIZE_MAX;
        for (size_t rr = r; rr < M.size(); ++rr)
            if (M[rr][c] != 0) {
                pr = rr;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(M[r], M[pr]);
        Rat pv = M[r][c];
        for (auto& v : M[r]) v /= pv;
        for (size_t rr = 0; rr < M.size(); ++rr)
            if (rr != r && M[rr][c] != 0) {
                Rat f = M[rr][c];
                for (size_t k = 0; k < ncol; ++k) M[rr][k] -= f * M[r][k];
            }
        pivots.push_back(c);
        ++r;
        if (r == M.size()) break;
    }
    std::set<size_t> pivot_set(pivots.begin(), pivots.end());
    for (size_t fc = 0; fc < ncol; ++fc) {
        if (pivot_set.count(fc)) continue;
        std::vector<Rat> sol(ncol, Rat(0));
        sol[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = -M[i][fc];
        Int den = 1;
        for (auto& v : sol) den = den / int_gcd(den, denominator(v)) * denominator(v);
        std::vector<Int> iv;
        for (auto& v : sol) iv.push_back(rat_to_int(v * Rat(den)));
        Int g = 0;
        for (auto& v : iv) g = int_gcd(g, v);
        if (g > 1)
            for (auto& v : iv) v /= g;
        out.push_back(std::move(iv));
    }
    return out;
}

inline void normalize_pq(std::vector<Int>& p, std::vector<Int>& q) {
    Int g = 0;
    for (auto& v : p) g = int_gcd(g, v);
    for (auto& v : q) g = int_gcd(g, v);
    if (g > 1) {
        for (auto& v : p) v /= g;
        for (auto& v : q) v /= g;
    }
    Int lead = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
        if (*it != 0) {
            lead = *it;
            break;
        }
    if (lead < 0) {
        for (auto& v : p) v = -v;
        for (auto& v : q) v = -v;
    }
}

}  // namespace detail

constexpr int kMaxGuessShift = 4;

// Scan shifts 0..kMaxGuessShift (outer) and degrees 0..max_degree (inner);
// first verified fit wins.  A fit trains on a 2(deg+1)-row prefix, verifies
// on >= min_holdout held-out rows, and must have p(n) != 0 and q(n) != 0
// throughout the verified range.  Eventually-constant input (final plateau)
// is rejected up front; leading zeros are skipped.
inline std::optional<HypergeometricGuess> guess_hypergeometric(const std::vector<Int>& seq,
                                                               int max_degree = 4,
                                                               int min_holdout = 4) {
    if (int(seq.size()) < 2 * (max_degree + 1) + min_holdout) return std::nullopt;
    size_t start = 0;
    while (start < seq.size() && seq[start] == 0) ++start;
    if (start >= seq.size()) return std::nullopt;
    std::vector<Int> vals(seq.begin() + start, seq.end());
    for (auto& v : vals)
        if (v == 0) return std::nullopt;  // internal zero: p(n) would vanish on the range
    bool plateau = true;
    size_t tail = vals.size() > size_t(min_holdout) ? vals.size() - min_holdout : 0;
    for (size_t i = tail; i < vals.size(); ++i)
        if (vals[i] != vals[tail]) {
            plateau = false;
            break;
        }
    if (plateau) return std::nullopt;  // eventually constant
    for (int shift = 0; shift <= kMaxGuessShift; ++shift) {
        if (size_t(shift) >= vals.size()) break;
        std::vector<Int> window(vals.begin() + shift, vals.end());
        for (int d = 0; d <= max_degree; ++d) {
            size_t npts = 2 * (d + 1);
            if (window.size() - 1 < npts + size_t(min_holdout)) break;
            std::vector<std::vector<Rat>> train;
            for (size_t t = 1; t < window.size() && train.size() < npts; ++t) {
                long n = long(start) + shift + long(t) + 1;  // a(n) = window[t]
                std::vector<Rat> row;
                Int pw = 1;
                for (int k = 0; k <= d; ++k) {
                    row.emplace_back(pw * window[t]);
                    pw *= n;
                }
                pw = 1;
                for (int k = 0; k <= d; ++k) {
                    row.emplace_back(-(pw * window[t - 1]));
                    pw *= n;
                }
                train.push_back(std::move(row));
            }
            for (auto& sol : detail::nullspace_basis(train)) {
                std::vector<Int> q(sol.begin(), sol.begin() + d + 1);
                std::vector<Int> p(sol.begin() + d + 1, sol.end());
                bool ok = true;
                for (size_t t = 1; t < window.size(); ++t) {
                    long n = long(start) + shift + long(t) + 1;
                    Int pv = detail::eval_int_poly(p, n);
                    Int qv = detail::eval_int_poly(q, n);
                    if (pv == 0 || qv == 0 || qv * window[t] != pv * window[t - 1]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    detail::normalize_pq(p, q);
                    return HypergeometricGuess{std::move(p), std::move(q),
                                               int(start) + shift + 2};
                }
            }
        }
    }
    return std::nullopt;
}

// ---- constant-coefficient linear recurrences ----

// a(n) = sum coeffs[i-1] a(n-i); exact rational coefficients from the fit.
struct LinearRecurrence {
    std::vector<Rat> coeffs;

    int order() const { return int(coeffs.size()); }

    // Integer vector (e_0..e_d) with sum e_i a(n-i) = 0, e_0 > 0, gcd 1:
    // the characteristic coefficients of the recurrence.
    std::vector<Int> characteristic() const {
        Int den = 1;
        for (auto& v : coeffs) den = den / detail::int_gcd(den, denominator(v)) * denominator(v);
        std::vector<Int> e;
        e.push_back(den);
        for (auto& v : coeffs) e.push_back(rat_to_int(-v * Rat(den)));
        Int g = 0;
        for (auto& v : e) g = detail::int_gcd(g, v);
        if (g > 1)
            for (auto& v : e) v /= g;
        return e;
    }
};

namespace detail {

// Unique solution of an augmented rational system, or nothing when the
// system is inconsistent or underdetermined.
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                                    size_t nvars) {
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < nvars; ++c) {
        size_t pr = SIZE_MAX;
        for (size_t rr = r; rr < M.size(); ++rr)
            if (M[rr][c] != 0) {
                pr = rr;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(M[r], M[pr]);
        Rat pv = M[r][c];
        for (auto& v : M[r]) v /= pv;
        for (size_t rr = 0; rr < M.size(); ++rr)
            if (rr != r && M[rr][c] != 0) {
                Rat f = M[rr][c];
                for (size_t k = 0; k < M[rr].size(); ++k) M[rr][k] -= f * M[r][k];
            }
        pivots.push_back(c);
        ++r;
    }
    for (size_t rr = r; rr < M.size(); ++rr) {
        bool zero = true;
        for (size_t c = 0; c < nvars; ++c)
            if (M[rr][c] != 0) {
                zero = false;
                break;
            }
        if (zero && M[rr].back() != 0) return std::nullopt;  // inconsistent
    }
    if (pivots.size() < nvars) return std::nullopt;  // underdetermined
    std::vector<Rat> sol(nvars, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) sol[i] = M[i].back();
    return sol;
}

}  // namespace detail

// Smallest-order constant-coefficient recurrence fitting the whole sequence,
// trained on a 2*order-row prefix and verified on >= min_holdout further
// rows; none if no order <= max_order verifies.
inline std::optional<LinearRecurrence> guess_linear_recurrence(const std::vector<Int>& seq,
                                                               int max_order = 8,
                                                               int min_holdout = 4) {
    for (int order = 1; order <= max_order; ++order) {
        size_t need = 2 * size_t(order);
        if (seq.size() < size_t(order) + need + size_t(min_holdout)) break;
        std::vector<std::pair<std::vector<Int>, Int>> rows;
        for (size_t t = order; t < seq.size(); ++t) {
            std::vector<Int> lhs;
            for (int i = 1; i <= order; ++i) lhs.push_back(seq[t - i]);
            rows.emplace_back(std::move(lhs), seq[t]);
        }
        std::vector<std::vector<Rat>> train;
        for (size_t i = 0; i < need; ++i) {
            std::vector<Rat> row;
            for (auto& v : rows[i].first) row.emplace_back(v);
            row.emplace_back(rows[i].second);
            train.push_back(std::move(row));
        }
        auto sol = detail::solve_linear(std::move(train), order);
        if (!sol) continue;
        bool ok = true;
        for (auto& [lhs, rhs] : rows) {
            Rat acc = 0;
            for (int i = 0; i < order; ++i) acc += (*sol)[i] * Rat(lhs[i]);
            if (acc != Rat(rhs)) {
                ok = false;
                break;
            }
        }
        if (ok) return LinearRecurrence{std::move(*sol)};
    }
    return std::nullopt;
}

// ---- palindromes ----

// True iff the coefficient list equals its reverse.
inline bool check_palindromic(const std::vector<Int>& coeffs) {
    size_t n = coeffs.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (coeffs[i] != coeffs[n - 1 - i]) return false;
    return true;
}

}  // namespace treecolor
