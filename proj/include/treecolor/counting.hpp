#pragma once

#include "treecolor/dyck.hpp"
#include "treecolor/matrix.hpp"
#include "treecolor/numeric.hpp"
#include "treecolor/trees.hpp"

#include <stdexcept>
#include <vector>

namespace treecolor {

// ---- the counting recurrence ----

constexpr int kDefaultDepth = 20;

// t^{(i)}(0..N) per root color plus the total row; index n is the vertex
// count, with t(0) = 0 by convention.
struct SequenceTable {
    int m = 0;
    int N = 0;
    std::vector<std::vector<Int>> per_color;  // [i-1][n]
    std::vector<Int> total;                   // [n]

    const Int& t(int i, int n) const { return per_color[i - 1][n]; }
};

// Rightmost-subtree decomposition:
//   t^{(i)}(1) = 1,
//   t^{(i)}(n) = sum_{k=1}^{n-1} sum_j a_ij t^{(i)}(k) t^{(j)}(n-k).
// Dense table, O(m N^2) big-integer multiplications.
inline SequenceTable count_by_root(const Matrix& A, int N = kDefaultDepth) {
    if (N < 1) throw std::invalid_argument("count_by_root: N must be >= 1");
    int m = A.m;
    SequenceTable tab;
    tab.m = m;
    tab.N = N;
    tab.per_color.assign(m, std::vector<Int>(N + 1, 0));
    tab.total.assign(N + 1, 0);
    // s[i-1][q] = sum_j a_ij t^{(j)}(q): allowed rightmost subtrees below i.
    std::vector<std::vector<Int>> s(m, std::vector<Int>(N + 1, 0));
    for (int i = 0; i < m; ++i) tab.per_color[i][1] = 1;
    for (int n = 1; n <= N; ++n) {
        if (n >= 2) {
            for (int i = 0; i < m; ++i) {
                Int acc = 0;
                for (int k = 1; k <= n - 1; ++k) acc += tab.per_color[i][k] * s[i][n - k];
                tab.per_color[i][n] = std::move(acc);
            }
        }
        for (int i = 1; i <= m; ++i) {
            Int acc = 0;
            for (int j = 1; j <= m; ++j)
                if (A.a(i, j)) acc += tab.per_color[j - 1][n];
            s[i - 1][n] = std::move(acc);
        }
        for (int i = 0; i < m; ++i) tab.total[n] += tab.per_color[i][n];
    }
    return tab;
}

// The total row t(1..N), with the leading t(0) = 0 kept in place.
// Totals t(1..N), without the implicit t(0) = 0 slot.
inline std::vector<Int> count_total(const Matrix& A, int N = kDefaultDepth) {
    const auto& total = count_by_root(A, N).total;
    return std::vector<Int>(total.begin() + 1, total.end());
}

// ---- explicit enumeration (independent oracle) ----

inline std::vector<PlaneTree> enumerate_plane_trees(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_plane_trees: n out of bounds");
    std::vector<PlaneTree> out;
    for (const auto& w : enumerate_dyck_words(n - 1)) out.push_back(unglove(w));
    return out;
}

inline bool coloring_is_valid(const Matrix& A, const FlatTree& f, const std::vector<int>& colors) {
    for (int v = 1; v < f.n; ++v)
        if (!A.a(colors[f.parent[v]], colors[v])) return false;
    return true;
}

// Every valid A-colored tree on n vertices, exactly once; validity checked
// against the parent/child rule literally, no shortcuts.
inline std::vector<ColoredTree> enumerate_colored_trees(const Matrix& A, int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_colored_trees: n out of bounds");
    std::vector<ColoredTree> out;
    for (const auto& shape : enumerate_plane_trees(n)) {
        FlatTree f = flatten(shape);
        std::vector<int> colors(n, 1);
        for (;;) {
            if (coloring_is_valid(A, f, colors)) out.push_back({shape, colors});
            int pos = n - 1;
            while (pos >= 0 && colors[pos] == A.m) colors[pos--] = 1;
            if (pos < 0) break;
            ++colors[pos];
        }
    }
    return out;
}

// Tallies of enumerate_colored_trees grouped by root color.
inline std::vector<Int> brute_force_counts(const Matrix& A, int n) {
    std::vector<Int> per_color(A.m, 0);
    for (const auto& t : enumerate_colored_trees(A, n)) ++per_color[t.colors[0] - 1];
    return per_color;
}

}  // namespace treecolor
