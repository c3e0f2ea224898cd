#pragma once

#include "treecolor/counting.hpp"
#include "treecolor/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace treecolor {

// ---- verdicts ----

enum class EquivalenceKind { tree_coloring, strict, strong };

struct EquivalenceVerdict {
    EquivalenceKind kind;
    int depth = 0;
    enum class Result { equal_to_depth, distinguished_at_n, filtered_by_invariant } result;
    int witness_n = 0;       // least n where the sequences differ
    std::string invariant;   // pre-filter that fired

    bool equivalent() const { return result == Result::equal_to_depth; }
};

namespace detail {

inline EquivalenceVerdict equal_verdict(EquivalenceKind k, int N) {
    return {k, N, EquivalenceVerdict::Result::equal_to_depth, 0, ""};
}
inline EquivalenceVerdict witness_verdict(EquivalenceKind k, int N, int n) {
    return {k, N, EquivalenceVerdict::Result::distinguished_at_n, n, ""};
}
inline EquivalenceVerdict filter_verdict(EquivalenceKind k, int N, std::string inv) {
    return {k, N, EquivalenceVerdict::Result::filtered_by_invariant, 0, std::move(inv)};
}

// Sorted per-color prefixes t^{(i)}(1..n), as a multiset key.
inline std::vector<std::vector<Int>> prefix_multiset(const SequenceTable& t, int n) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(t.m);
    for (int i = 1; i <= t.m; ++i)
        rows.emplace_back(t.per_color[i - 1].begin() + 1, t.per_color[i - 1].begin() + 1 + n);
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace detail

// ---- pairwise deciders ----

// Per-color sequences are compared in order; pre-filter: corresponding rows
// must have the same number of ones.
inline EquivalenceVerdict strictly_equivalent(const Matrix& A, const Matrix& B, int N = 16) {
    if (A.m != B.m) throw std::invalid_argument("strictly_equivalent: size mismatch");
    auto ia = necessary_invariants(A), ib = necessary_invariants(B);
    if (ia.ones_per_row != ib.ones_per_row)
        return detail::filter_verdict(EquivalenceKind::strict, N, "row-ones");
    auto ta = count_by_root(A, N), tb = count_by_root(B, N);
    for (int n = 1; n <= N; ++n)
        for (int i = 1; i <= A.m; ++i)
            if (ta.t(i, n) != tb.t(i, n))
                return detail::witness_verdict(EquivalenceKind::strict, N, n);
    return detail::equal_verdict(EquivalenceKind::strict, N);
}

// Multisets of per-color sequences must coincide (equivalently, some
// permutation of A is strictly equivalent to B).
inline EquivalenceVerdict strongly_equivalent(const Matrix& A, const Matrix& B, int N = 16) {
    if (A.m != B.m) throw std::invalid_argument("strongly_equivalent: size mismatch");
    auto ia = necessary_invariants(A), ib = necessary_invariants(B);
    auto ra = ia.ones_per_row, rb = ib.ones_per_row;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return detail::filter_verdict(EquivalenceKind::strong, N, "row-ones");
    auto ta = count_by_root(A, N), tb = count_by_root(B, N);
    for (int n = 1; n <= N; ++n)
        if (detail::prefix_multiset(ta, n) != detail::prefix_multiset(tb, n))
            return detail::witness_verdict(EquivalenceKind::strong, N, n);
    return detail::equal_verdict(EquivalenceKind::strong, N);
}

// Total sequences must coincide; pre-filters: total ones (= t(2)) and the
// entry sum of A^T A + A^2 (= t(3)).
inline EquivalenceVerdict tree_coloring_equivalent(const Matrix& A, const Matrix& B, int N = 16) {
    if (A.m != B.m) throw std::invalid_argument("tree_coloring_equivalent: size mismatch");
    auto ia = necessary_invariants(A), ib = necessary_invariants(B);
    if (ia.ones_total != ib.ones_total)
        return detail::filter_verdict(EquivalenceKind::tree_coloring, N, "ones-total");
    if (ia.three_vertex_sum != ib.three_vertex_sum)
        return detail::filter_verdict(EquivalenceKind::tree_coloring, N, "three-vertex-sum");
    auto ta = count_total(A, N), tb = count_total(B, N);
    for (int n = 1; n <= N; ++n)
        if (ta[size_t(n) - 1] != tb[size_t(n) - 1])
            return detail::witness_verdict(EquivalenceKind::tree_coloring, N, n);
    return detail::equal_verdict(EquivalenceKind::tree_coloring, N);
}

// ---- rewrite moves ----

// Switch the 0-entries of row l at columns I with the 1-entries at columns J.
struct RewriteMove {
    int row = 0;
    std::vector<int> set_I;  // a_{l i} = 0 before the move
    std::vector<int> set_J;  // a_{l j} = 1 before the move

    bool operator==(const RewriteMove& o) const {
        return row == o.row && set_I == o.set_I && set_J == o.set_J;
    }
};

inline Matrix apply_rewrite(const Matrix& A, const RewriteMove& mv) {
    if (mv.set_I.empty() || mv.set_I.size() != mv.set_J.size())
        throw std::invalid_argument("apply_rewrite: I and J must be nonempty and equal-sized");
    if (mv.row < 1 || mv.row > A.m) throw std::invalid_argument("apply_rewrite: bad row");
    std::set<int> seen;
    for (int i : mv.set_I) {
        if (i < 1 || i > A.m || !seen.insert(i).second)
            throw std::invalid_argument("apply_rewrite: bad set I");
        if (A.a(mv.row, i) != 0)
            throw std::invalid_argument("apply_rewrite: entry at I-column is not 0");
    }
    for (int j : mv.set_J) {
        if (j < 1 || j > A.m || !seen.insert(j).second)
            throw std::invalid_argument("apply_rewrite: bad set J");
        if (A.a(mv.row, j) != 1)
            throw std::invalid_argument("apply_rewrite: entry at J-column is not 1");
    }
    Matrix B = A;
    for (int i : mv.set_I) B.set(mv.row, i, 1);
    for (int j : mv.set_J) B.set(mv.row, j, 0);
    return B;
}

// All moves with |I| = |J| <= max_size whose balance condition
// sum_{i in I} t^{(i)}(n) = sum_{j in J} t^{(j)}(n) holds for n <= N.
// Singleton moves detect interchangeable colors.
inline std::vector<RewriteMove> find_rewrites(const Matrix& A, int N = 16, int max_size = 3) {
    auto tab = count_by_root(A, N);
    auto balanced = [&](const std::vector<int>& I, const std::vector<int>& J) {
        for (int n = 1; n <= N; ++n) {
            Int si = 0, sj = 0;
            for (int i : I) si += tab.t(i, n);
            for (int j : J) sj += tab.t(j, n);
            if (si != sj) return false;
        }
        return true;
    };
    int m = A.m;
    std::vector<std::vector<int>> subsets;  // nonempty subsets of {1..m}, |.| <= max_size
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int c = 0; c < m; ++c)
            if (mask & (1u << c)) s.push_back(c + 1);
        if (int(s.size()) <= max_size) subsets.push_back(std::move(s));
    }
    std::vector<RewriteMove> out;
    for (int l = 1; l <= m; ++l) {
        for (const auto& I : subsets) {
            bool okI = true;
            for (int i : I)
                if (A.a(l, i) != 0) { okI = false; break; }
            if (!okI) continue;
            for (const auto& J : subsets) {
                if (J.size() != I.size()) continue;
                bool okJ = true;
                for (int j : J)
                    if (A.a(l, j) != 1) { okJ = false; break; }
                if (!okJ) continue;
                if (balanced(I, J)) out.push_back({l, I, J});
            }
        }
    }
    return out;
}

// ---- exhaustive classification ----

struct ClassificationCatalog {
    int m = 0;
    int depth = 0;
    std::vector<Matrix> iso_classes;               // canonical representatives, ascending
    std::vector<std::vector<int>> strong_classes;  // indices into iso_classes
    std::vector<std::vector<int>> tree_classes;    // indices into strong_classes
    std::vector<std::vector<Int>> sequence_fingerprints;  // t(1..depth) per tree class
};

namespace detail {

inline std::string sequence_key(const std::vector<Int>& seq) {
    std::string s;
    for (const auto& v : seq) {
        s += v.str();
        s.push_back(',');
    }
    return s;
}

template <class Fn>
inline void parallel_over(size_t count, Fn&& fn, unsigned jobs = 0) {
    unsigned workers = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || count < 64) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Sweep all 2^(m^2) matrices: group by canonical form, strong classes by
// per-color-sequence multiset, tree classes by total sequence.  Parallel map
// with a deterministic single-owner merge; representatives are least
// canonical forms.
inline ClassificationCatalog classify_all(int m, int N = 16, unsigned jobs = 0) {
    if (m < 1 || m > 5) throw std::invalid_argument("classify_all: m out of supported range");
    ClassificationCatalog cat;
    cat.m = m;
    cat.depth = N;

    const size_t total = size_t(1) << (m * m);
    unsigned workers = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::set<std::vector<uint8_t>>> found(workers);
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (size_t mask = w; mask < total; mask += workers) {
                    Matrix A(m);
                    for (int c = 0; c < m * m; ++c) A.bits[c] = uint8_t((mask >> c) & 1);
                    found[w].insert(canonical_form(A).first.bits);
                }
            });
        for (auto& th : pool) th.join();
    }
    std::set<std::vector<uint8_t>> reps;
    for (auto& part : found) reps.merge(part);
    for (auto& bits : reps) cat.iso_classes.emplace_back(m, bits);

    std::vector<SequenceTable> tables(cat.iso_classes.size());
    detail::parallel_over(
        cat.iso_classes.size(), [&](size_t i) { tables[i] = count_by_root(cat.iso_classes[i], N); },
        jobs);

    // Strong classes: multiset of per-color sequences, full sequences as keys.
    std::map<std::string, std::vector<int>> strong;
    for (size_t i = 0; i < cat.iso_classes.size(); ++i) {
        std::vector<std::string> rows;
        for (int c = 1; c <= m; ++c)
            rows.push_back(detail::sequence_key(std::vector<Int>(
                tables[i].per_color[c - 1].begin() + 1, tables[i].per_color[c - 1].end())));
        std::sort(rows.begin(), rows.end());
        std::string key;
        for (auto& r : rows) key += r + "|";
        strong[key].push_back(int(i));
    }
    std::vector<std::pair<int, std::vector<int>>> strong_sorted;
    for (auto& [key, members] : strong) {
        std::sort(members.begin(), members.end());
        strong_sorted.push_back({members.front(), members});
    }
    std::sort(strong_sorted.begin(), strong_sorted.end());
    for (auto& [least, members] : strong_sorted) cat.strong_classes.push_back(members);

    // Tree classes: total sequence over strong classes.
    std::map<std::string, std::vector<int>> tree;
    std::vector<std::vector<Int>> totals_per_strong;
    for (auto& members : cat.strong_classes) {
        const auto& tot = tables[members.front()].total;
        totals_per_strong.emplace_back(tot.begin() + 1, tot.end());
    }
    for (size_t s = 0; s < cat.strong_classes.size(); ++s)
        tree[detail::sequence_key(totals_per_strong[s])].push_back(int(s));
    std::vector<std::pair<int, std::vector<int>>> tree_sorted;
    for (auto& [key, members] : tree) {
        std::sort(members.begin(), members.end());
        tree_sorted.push_back({members.front(), members});
    }
    std::sort(tree_sorted.begin(), tree_sorted.end());
    for (auto& [least, members] : tree_sorted) {
        cat.tree_classes.push_back(members);
        cat.sequence_fingerprints.push_back(totals_per_strong[members.front()]);
    }
    return cat;
}

}  // namespace treecolor
