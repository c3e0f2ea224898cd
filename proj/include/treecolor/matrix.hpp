#pragma once

#include "treecolor/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecolor {

// ---- coloring matrices ----

// m x m zero-one matrix; a(i,j) = 1 means color j may appear as a child of
// color i.  Colors are 1-indexed throughout.
struct Matrix {
    int m = 0;
    std::vector<uint8_t> bits;  // row-major, m*m entries

    Matrix() = default;
    explicit Matrix(int m_) : m(m_), bits(size_t(m_) * m_, 0) {}
    Matrix(int m_, std::vector<uint8_t> b) : m(m_), bits(std::move(b)) {}

    uint8_t a(int i, int j) const { return bits[size_t(i - 1) * m + (j - 1)]; }
    void set(int i, int j, uint8_t v) { bits[size_t(i - 1) * m + (j - 1)] = v; }

    bool operator==(const Matrix& o) const { return m == o.m && bits == o.bits; }
    bool operator<(const Matrix& o) const {
        if (m != o.m) return m < o.m;
        return bits < o.bits;  // lexicographic on the row-major flattening
    }
};

struct ParseError : std::runtime_error {
    int row, col;  // 1-indexed position of the offending cell, 0 if n/a
    ParseError(const std::string& what, int r, int c)
        : std::runtime_error(what), row(r), col(c) {}
};

inline Matrix parse_matrix(const std::string& text) {
    // JSON array-of-arrays form.
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '[') {
        std::vector<std::vector<uint8_t>> rows;
        size_t i = p + 1;
        auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
        skip();
        while (i < text.size() && text[i] != ']') {
            if (text[i] != '[')
                throw ParseError("expected '[' starting a row", int(rows.size()) + 1, 1);
            ++i;
            std::vector<uint8_t> row;
            skip();
            while (i < text.size() && text[i] != ']') {
                char c = text[i];
                if (c == '0' || c == '1') {
                    row.push_back(uint8_t(c - '0'));
                    ++i;
                } else if (c == ',') {
                    ++i;
                } else if (std::isspace((unsigned char)c)) {
                    ++i;
                } else {
                    throw ParseError(std::string("entry is not 0 or 1: '") + c + "'",
                                     int(rows.size()) + 1, int(row.size()) + 1);
                }
            }
            if (i >= text.size()) throw ParseError("unterminated row", int(rows.size()) + 1, 0);
            ++i;  // ']'
            rows.push_back(std::move(row));
            skip();
            if (i < text.size() && text[i] == ',') { ++i; skip(); }
        }
        if (i >= text.size()) throw ParseError("unterminated matrix", 0, 0);
        if (rows.empty()) throw ParseError("empty matrix", 0, 0);
        int m = int(rows.size());
        for (int r = 0; r < m; ++r)
            if (int(rows[r].size()) != m)
                throw ParseError("ragged rows: row has " + std::to_string(rows[r].size()) +
                                     " entries, expected " + std::to_string(m),
                                 r + 1, int(rows[r].size()));
        Matrix A(m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) A.set(r + 1, c + 1, rows[r][c]);
        return A;
    }

    // "row;row;..." bit-string form.
    if (text.empty()) throw ParseError("empty input", 0, 0);
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    rows.push_back(cur);
    int m = int(rows.size());
    for (int r = 0; r < m; ++r) {
        if (int(rows[r].size()) != m)
            throw ParseError("ragged rows: row has " + std::to_string(rows[r].size()) +
                                 " columns, expected " + std::to_string(m) + " (square matrix)",
                             r + 1, int(rows[r].size()));
        for (int c = 0; c < m; ++c)
            if (rows[r][c] != '0' && rows[r][c] != '1')
                throw ParseError(std::string("entry is not 0 or 1: '") + rows[r][c] + "'",
                                 r + 1, c + 1);
    }
    Matrix A(m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) A.set(r + 1, c + 1, uint8_t(rows[r][c] - '0'));
    return A;
}

inline std::string to_text(const Matrix& A) {
    std::string s;
    for (int i = 1; i <= A.m; ++i) {
        if (i > 1) s.push_back(';');
        for (int j = 1; j <= A.m; ++j) s.push_back(char('0' + A.a(i, j)));
    }
    return s;
}

// ---- color permutations ----

// p[i-1] is the image of color i; images are 1-indexed.
using ColorPermutation = std::vector<int>;

inline ColorPermutation identity_permutation(int m) {
    ColorPermutation p(m);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline ColorPermutation inverse_permutation(const ColorPermutation& p) {
    ColorPermutation q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i + 1);
    return q;
}

// B with b_{p(i),p(j)} = a_{ij}.
inline Matrix apply_permutation(const Matrix& A, const ColorPermutation& p) {
    if (int(p.size()) != A.m)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    Matrix B(A.m);
    for (int i = 1; i <= A.m; ++i)
        for (int j = 1; j <= A.m; ++j) B.set(p[i - 1], p[j - 1], A.a(i, j));
    return B;
}

// Lexicographically least row-major flattening over all m! simultaneous
// row/column permutations, with one permutation achieving it.  Matrices are
// isomorphic iff their canonical forms are equal.
inline std::pair<Matrix, ColorPermutation> canonical_form(const Matrix& A) {
    ColorPermutation p = identity_permutation(A.m);
    Matrix best = apply_permutation(A, p);
    ColorPermutation best_p = p;
    while (std::next_permutation(p.begin(), p.end())) {
        Matrix B = apply_permutation(A, p);
        if (B < best) {
            best = B;
            best_p = p;
        }
    }
    return {best, best_p};
}

// ---- cheap necessary invariants ----

struct NecessaryInvariants {
    Int ones_total = 0;
    std::vector<int> ones_per_row;
    Int three_vertex_sum = 0;  // sum of the entries of A^T A + A^2
};

inline NecessaryInvariants necessary_invariants(const Matrix& A) {
    NecessaryInvariants inv;
    inv.ones_per_row.assign(A.m, 0);
    for (int i = 1; i <= A.m; ++i)
        for (int j = 1; j <= A.m; ++j)
            if (A.a(i, j)) {
                ++inv.ones_per_row[i - 1];
                ++inv.ones_total;
            }
    for (int i = 1; i <= A.m; ++i)
        for (int j = 1; j <= A.m; ++j) {
            long s = 0;
            for (int k = 1; k <= A.m; ++k)
                s += A.a(k, i) * A.a(k, j) + A.a(i, k) * A.a(k, j);
            inv.three_vertex_sum += s;
        }
    return inv;
}

// Sum of the entries of A^n: number of colored rooted paths on n+1 vertices.
inline Int matrix_power_entry_sum(const Matrix& A, int n) {
    std::vector<Int> col(A.m, 1);  // start from the all-ones vector
    for (int step = 0; step < n; ++step) {
        std::vector<Int> next(A.m, 0);
        for (int i = 1; i <= A.m; ++i)
            for (int j = 1; j <= A.m; ++j)
                if (A.a(i, j)) next[i - 1] += col[j - 1];
        col = std::move(next);
    }
    Int total = 0;
    for (auto& v : col) total += v;
    return total;
}

// ---- catalogs ----

inline std::vector<Matrix> all_matrices(int m) {
    int cells = m * m;
    std::vector<Matrix> out;
    out.reserve(size_t(1) << cells);
    for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
        Matrix A(m);
        for (int c = 0; c < cells; ++c) A.bits[c] = uint8_t((mask >> c) & 1);
        out.push_back(std::move(A));
    }
    return out;
}

}  // namespace treecolor
