#pragma once

#include "treecolor/counting.hpp"
#include "treecolor/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace treecolor {

// ---- truncated power series ----

// Exact rational coefficients of x^0..x^N; all arithmetic exact to order N.
struct TruncatedSeries {
    int order = 0;
    std::vector<Rat> c;  // size order+1

    TruncatedSeries() : c(1, Rat(0)) {}
    explicit TruncatedSeries(int N) : order(N), c(size_t(N) + 1, Rat(0)) {}
    TruncatedSeries(int N, std::vector<Rat> coeffs) : order(N), c(std::move(coeffs)) {
        c.resize(size_t(N) + 1, Rat(0));
    }

    static TruncatedSeries x(int N) {
        TruncatedSeries s(N);
        if (N >= 1) s.c[1] = 1;
        return s;
    }
    static TruncatedSeries constant(const Rat& v, int N) {
        TruncatedSeries s(N);
        s.c[0] = v;
        return s;
    }
    static TruncatedSeries from_ints(const std::vector<Int>& coeffs, int N) {
        TruncatedSeries s(N);
        for (size_t i = 0; i < coeffs.size() && int(i) <= N; ++i) s.c[i] = Rat(coeffs[i]);
        return s;
    }

    bool is_zero() const {
        for (auto& v : c)
            if (v != 0) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (int i = 0; i <= order; ++i) c[i] += o.c[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check(o);
        for (int i = 0; i <= order; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j <= a.order; ++j)
                if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const Rat& k, const TruncatedSeries& a) {
        TruncatedSeries r(a.order);
        for (int i = 0; i <= a.order; ++i) r.c[i] = k * a.c[i];
        return r;
    }

    // Requires an invertible (nonzero) constant term in the divisor; callers
    // needing x-division shift indices explicitly.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        if (b.c[0] == 0)
            throw std::domain_error("series division requires a unit constant term");
        TruncatedSeries r(a.order);
        for (int n = 0; n <= a.order; ++n) {
            Rat acc = a.c[n];
            for (int k = 0; k < n; ++k)
                if (r.c[k] != 0 && b.c[n - k] != 0) acc -= r.c[k] * b.c[n - k];
            r.c[n] = acc / b.c[0];
        }
        return r;
    }

    TruncatedSeries pow(int e) const {
        TruncatedSeries r = constant(1, order);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // Multiply by x^k (index shift).
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r(order);
        for (int i = 0; i + k <= order; ++i) r.c[i + k] = c[i];
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return order == o.order && c == o.c; }

  private:
    void check(const TruncatedSeries& o) const {
        if (order != o.order) throw std::invalid_argument("series order mismatch");
    }
};

// ---- series from count tables ----

constexpr int kTotalColor = 0;

// Coefficient of x^n is the count at n; the constant coefficient is 0.
// color = kTotalColor selects the total row.
inline TruncatedSeries series_from_counts(const SequenceTable& table, int color) {
    TruncatedSeries s(table.N);
    if (color == kTotalColor) {
        for (int n = 1; n <= table.N; ++n) s.c[n] = Rat(table.total[n]);
    } else {
        if (color < 1 || color > table.m)
            throw std::invalid_argument("series_from_counts: bad color");
        for (int n = 1; n <= table.N; ++n) s.c[n] = Rat(table.t(color, n));
    }
    return s;
}

// Unique power-series solution of F^(i) = x + F^(i) sum_j a_ij F^(j) with
// zero constant terms, computed order by order.  Independent route to the
// same numbers as count_by_root.
inline std::vector<TruncatedSeries> solve_system(const Matrix& A, int N) {
    if (N < 1) throw std::invalid_argument("solve_system: N must be >= 1");
    int m = A.m;
    std::vector<TruncatedSeries> F(m, TruncatedSeries(N));
    std::vector<TruncatedSeries> S(m, TruncatedSeries(N));  // S_i = sum_j a_ij F^(j)
    for (int i = 0; i < m; ++i) F[i].c[1] = 1;
    for (int n = 1; n <= N; ++n) {
        if (n >= 2)
            for (int i = 0; i < m; ++i) {
                Rat acc = 0;
                for (int k = 1; k <= n - 1; ++k) acc += F[i].c[k] * S[i].c[n - k];
                F[i].c[n] = acc;
            }
        for (int i = 1; i <= m; ++i) {
            Rat acc = 0;
            for (int j = 1; j <= m; ++j)
                if (A.a(i, j)) acc += F[j - 1].c[n];
            S[i - 1].c[n] = acc;
        }
    }
    return F;
}

}  // namespace treecolor
