#pragma once

#include "treecolor/matrix.hpp"
#include "treecolor/numeric.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace treecolor {

// ---- block template constructions ----

enum class Construction {
    diagonal,
    blowup,
    lower_block,
    root_only,
    up_set,
    separate_up_sets,
    zero_rows,
    cat_rows,
    unusable,
    singleton,
};

using BitBlock = std::vector<std::vector<uint8_t>>;  // rows of bits

// Parameters for adjoin(); which fields are read depends on the template.
// The base matrix always occupies the leading block and adjoined colors take
// the highest indices.
struct BlockSpec {
    Construction construction;
    std::vector<Matrix> parts;  // diagonal
    Matrix base;                // all other templates (A_1 for singleton)
    int k = 2;                  // blowup factor
    int m_prime = 1;            // number of adjoined colors
    BitBlock B;                 // auxiliary block (shape depends on template)
    Matrix C;                   // lower-block: bottom-right coloring matrix
    BitBlock A2;                // singleton: m1 x m2 block of column colors
};

// Identity P(G, F, x) = 0 between the composed total series G and the base
// total series F.
struct TrivariateIdentity {
    std::map<std::tuple<int, int, int>, Int> terms;  // (degG, degF, degX) -> coeff

    void add(int dg, int df, int dx, const Int& c) {
        if (c == 0) return;
        auto key = std::make_tuple(dg, df, dx);
        terms[key] += c;
        if (terms[key] == 0) terms.erase(key);
    }
};

struct Prediction {
    enum class Kind {
        total_sum_of_parts,   // t'(n) = sum of the parts' totals
        total_scaled,         // t'(n) = scale^n * t_base(n)
        per_root_equal_base,  // t'^(i)(n) = t_base^(i)(n) for i = 1..base.m
        per_root_x,           // the color's series is exactly x
        per_root_catalan,     // t'^(color)(n) = C_{n-1}
        per_root_rational,    // F'^(color) = x / (1 - sum_j brow_j F_base^(j))
        per_root_power,       // t'^(color)(n) = scale^{n-1}
        total_identity,       // identity(G, F, x) = 0
    } kind;
    std::vector<Matrix> parts;
    Matrix base;
    Int scale = 0;
    int color = 0;
    std::vector<uint8_t> brow;
    TrivariateIdentity identity;
};

struct AdjoinResult {
    Matrix matrix;
    std::vector<Prediction> predictions;
};

inline Matrix block_diagonal(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("block_diagonal: no parts");
    int m = 0;
    for (auto& p : parts) m += p.m;
    Matrix A(m);
    int off = 0;
    for (auto& p : parts) {
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.m; ++j) A.set(off + i, off + j, p.a(i, j));
        off += p.m;
    }
    return A;
}

// Each bit becomes a k x k constant block.
inline Matrix blowup(const Matrix& A, int k) {
    if (k < 1) throw std::invalid_argument("blowup: k must be >= 1");
    Matrix B(A.m * k);
    for (int i = 1; i <= A.m; ++i)
        for (int j = 1; j <= A.m; ++j)
            if (A.a(i, j))
                for (int di = 0; di < k; ++di)
                    for (int dj = 0; dj < k; ++dj)
                        B.set((i - 1) * k + di + 1, (j - 1) * k + dj + 1, 1);
    return B;
}

namespace detail {

inline void check_block(const BitBlock& B, size_t rows, size_t cols, const char* what) {
    if (B.size() != rows) throw std::invalid_argument(std::string(what) + ": bad block height");
    for (auto& r : B)
        if (r.size() != cols) throw std::invalid_argument(std::string(what) + ": bad block width");
}

inline Prediction per_root_equal(const Matrix& base) {
    Prediction p{Prediction::Kind::per_root_equal_base};
    p.base = base;
    return p;
}

}  // namespace detail

inline AdjoinResult adjoin(const BlockSpec& spec) {
    using K = Prediction::Kind;
    AdjoinResult out;
    const Matrix& A = spec.base;
    const int m = A.m;
    const int mp = spec.m_prime;

    switch (spec.construction) {
        case Construction::diagonal: {
            out.matrix = block_diagonal(spec.parts);
            Prediction p{K::total_sum_of_parts};
            p.parts = spec.parts;
            out.predictions.push_back(std::move(p));
            return out;
        }
        case Construction::blowup: {
            out.matrix = blowup(A, spec.k);
            Prediction p{K::total_scaled};
            p.base = A;
            p.scale = spec.k;
            out.predictions.push_back(std::move(p));
            return out;
        }
        case Construction::lower_block: {
            // [[A, 0], [B, C]]
            int mc = spec.C.m;
            detail::check_block(spec.B, size_t(mc), size_t(m), "lower_block");
            Matrix R(m + mc);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
            for (int i = 1; i <= mc; ++i) {
                for (int j = 1; j <= m; ++j) R.set(m + i, j, spec.B[i - 1][j - 1]);
                for (int j = 1; j <= mc; ++j) R.set(m + i, m + j, spec.C.a(i, j));
            }
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(A));
            return out;
        }
        case Construction::root_only: {
            // [[A, 0], [B, 0]]
            detail::check_block(spec.B, size_t(mp), size_t(m), "root_only");
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
            for (int i = 1; i <= mp; ++i)
                for (int j = 1; j <= m; ++j) R.set(m + i, j, spec.B[i - 1][j - 1]);
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(A));
            bool all_ones = true;
            for (int i = 0; i < mp; ++i) {
                Prediction p{K::per_root_rational};
                p.base = A;
                p.color = m + i + 1;
                p.brow = spec.B[i];
                out.predictions.push_back(std::move(p));
                for (int j = 0; j < m; ++j)
                    if (!spec.B[i][j]) all_ones = false;
            }
            if (all_ones) {
                // G = F + m'x/(1-F):  G - GF - F + F^2 - m'x = 0
                Prediction p{K::total_identity};
                p.base = A;
                p.identity.add(1, 0, 0, 1);
                p.identity.add(1, 1, 0, -1);
                p.identity.add(0, 1, 0, -1);
                p.identity.add(0, 2, 0, 1);
                p.identity.add(0, 0, 1, -mp);
                out.predictions.push_back(std::move(p));
            }
            return out;
        }
        case Construction::up_set: {
            // [[A, 0], [1, 1]]
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
            for (int i = 1; i <= mp; ++i)
                for (int j = 1; j <= m + mp; ++j) R.set(m + i, j, 1);
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(A));
            // G = F + G^2 - GF + m'x:  G - F - G^2 + GF - m'x = 0
            Prediction p{K::total_identity};
            p.base = A;
            p.identity.add(1, 0, 0, 1);
            p.identity.add(0, 1, 0, -1);
            p.identity.add(2, 0, 0, -1);
            p.identity.add(1, 1, 0, 1);
            p.identity.add(0, 0, 1, -mp);
            out.predictions.push_back(std::move(p));
            return out;
        }
        case Construction::separate_up_sets: {
            // [[A, 0], [1, I]]
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
            for (int i = 1; i <= mp; ++i) {
                for (int j = 1; j <= m; ++j) R.set(m + i, j, 1);
                R.set(m + i, m + i, 1);
            }
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(A));
            // G^2 + ((m'-2)F - m')G + (m'F - (m'-1)F^2 + m'^2 x) = 0
            Prediction p{K::total_identity};
            p.base = A;
            p.identity.add(2, 0, 0, 1);
            p.identity.add(1, 1, 0, mp - 2);
            p.identity.add(1, 0, 0, -mp);
            p.identity.add(0, 1, 0, mp);
            p.identity.add(0, 2, 0, -(mp - 1));
            p.identity.add(0, 0, 1, Int(mp) * mp);
            out.predictions.push_back(std::move(p));
            return out;
        }
        case Construction::zero_rows: {
            // [[A, B], [0, 0]]
            detail::check_block(spec.B, size_t(m), size_t(mp), "zero_rows");
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i) {
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
                for (int j = 1; j <= mp; ++j) R.set(i, m + j, spec.B[i - 1][j - 1]);
            }
            out.matrix = std::move(R);
            for (int i = 1; i <= mp; ++i) {
                Prediction p{K::per_root_x};
                p.color = m + i;
                out.predictions.push_back(std::move(p));
            }
            return out;
        }
        case Construction::cat_rows: {
            // [[A, B], [0, I]]
            detail::check_block(spec.B, size_t(m), size_t(mp), "cat_rows");
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i) {
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
                for (int j = 1; j <= mp; ++j) R.set(i, m + j, spec.B[i - 1][j - 1]);
            }
            for (int i = 1; i <= mp; ++i) R.set(m + i, m + i, 1);
            out.matrix = std::move(R);
            for (int i = 1; i <= mp; ++i) {
                Prediction p{K::per_root_catalan};
                p.color = m + i;
                out.predictions.push_back(std::move(p));
            }
            return out;
        }
        case Construction::unusable: {
            // [[A, 0], [0, 0]]
            Matrix R(m + mp);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j) R.set(i, j, A.a(i, j));
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(A));
            for (int i = 1; i <= mp; ++i) {
                Prediction p{K::per_root_x};
                p.color = m + i;
                out.predictions.push_back(std::move(p));
            }
            // G = F + m'x
            Prediction p{K::total_identity};
            p.base = A;
            p.identity.add(1, 0, 0, 1);
            p.identity.add(0, 1, 0, -1);
            p.identity.add(0, 0, 1, -mp);
            out.predictions.push_back(std::move(p));
            return out;
        }
        case Construction::singleton: {
            // base = A1 (m1 x m1), A2 (m1 x m2), B (m3 x m2):
            //   A  = [[A1, A2], [0, 0]]          (m1+m2 colors)
            //   A' = [[A1, A2, 0], [0,0,0], [0, B, 0]]
            int m1 = m;
            if (spec.A2.empty()) throw std::invalid_argument("singleton: empty A2");
            int m2 = int(spec.A2[0].size());
            detail::check_block(spec.A2, size_t(m1), size_t(m2), "singleton A2");
            int m3 = int(spec.B.size());
            detail::check_block(spec.B, size_t(m3), size_t(m2), "singleton B");
            Matrix baseA(m1 + m2);
            for (int i = 1; i <= m1; ++i) {
                for (int j = 1; j <= m1; ++j) baseA.set(i, j, A.a(i, j));
                for (int j = 1; j <= m2; ++j) baseA.set(i, m1 + j, spec.A2[i - 1][j - 1]);
            }
            Matrix R(m1 + m2 + m3);
            for (int i = 1; i <= m1 + m2; ++i)
                for (int j = 1; j <= m1 + m2; ++j) R.set(i, j, baseA.a(i, j));
            for (int i = 1; i <= m3; ++i)
                for (int j = 1; j <= m2; ++j) R.set(m1 + m2 + i, m1 + j, spec.B[i - 1][j - 1]);
            out.matrix = std::move(R);
            out.predictions.push_back(detail::per_root_equal(baseA));
            std::vector<long> rowsums;
            for (int i = 0; i < m3; ++i) {
                long s = 0;
                for (int j = 0; j < m2; ++j) s += spec.B[i][j];
                rowsums.push_back(s);
                Prediction p{K::per_root_power};
                p.color = m1 + m2 + i + 1;
                p.scale = s;
                out.predictions.push_back(std::move(p));
            }
            // G = F + x sum_i 1/(1 - s_i x), cleared of denominators:
            //   W(x)(G - F) - x V(x) = 0,  W = prod (1 - s_i x),
            //   V = sum_i prod_{j != i} (1 - s_j x).
            std::vector<Int> W{1};
            for (long s : rowsums) {
                std::vector<Int> nw(W.size() + 1, 0);
                for (size_t d = 0; d < W.size(); ++d) {
                    nw[d] += W[d];
                    nw[d + 1] -= Int(s) * W[d];
                }
                W = std::move(nw);
            }
            std::vector<Int> V(std::max<size_t>(W.size() - 1, 1), 0);
            for (int i = 0; i < m3; ++i) {
                std::vector<Int> prod{1};
                for (int j = 0; j < m3; ++j) {
                    if (j == i) continue;
                    std::vector<Int> np(prod.size() + 1, 0);
                    for (size_t d = 0; d < prod.size(); ++d) {
                        np[d] += prod[d];
                        np[d + 1] -= Int(rowsums[j]) * prod[d];
                    }
                    prod = std::move(np);
                }
                for (size_t d = 0; d < prod.size(); ++d) V[d] += prod[d];
            }
            Prediction p{K::total_identity};
            p.base = baseA;
            for (size_t d = 0; d < W.size(); ++d) {
                p.identity.add(1, 0, int(d), W[d]);
                p.identity.add(0, 1, int(d), -W[d]);
            }
            for (size_t d = 0; d < V.size(); ++d) p.identity.add(0, 0, int(d) + 1, -V[d]);
            out.predictions.push_back(std::move(p));
            return out;
        }
    }
    throw std::invalid_argument("adjoin: unknown construction");
}

// ---- parameterized families ----

// Families 1 and 2 take (l, m); families 3..6 take m alone.  Family 3 yields
// its pair (A, B); every other family yields a single matrix.
inline std::vector<Matrix> family_matrix(int family, int p1, int p2 = 0) {
    switch (family) {
        case 1: {  // first l rows all ones, the rest zero
            int l = p1, m = p2, size = l + m;
            if (l < 1 || m < 0) throw std::invalid_argument("family 1: bad parameters");
            Matrix A(size);
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= size; ++j) A.set(i, j, 1);
            return {A};
        }
        case 2: {  // all ones except a lower-right m x m zero block
            int l = p1, m = p2, size = l + m;
            if (l < 1 || m < 0) throw std::invalid_argument("family 2: bad parameters");
            Matrix A(size);
            for (int i = 1; i <= size; ++i)
                for (int j = 1; j <= size; ++j)
                    if (i <= l || j <= l) A.set(i, j, 1);
            return {A};
        }
        case 3: {
            int m = p1;
            if (m < 4) throw std::invalid_argument("family 3: m must be >= 4");
            Matrix A(m), B(m);
            for (int i = 3; i <= m - 1; ++i) A.set(i, 2, 1);
            A.set(m, 1, 1);
            A.set(m, 2, 1);
            B.set(2, m, 1);
            B.set(3, m, 1);
            for (int i = 4; i <= m; ++i) B.set(i, 1, 1);
            return {A, B};
        }
        case 4: {  // staircase with the odd-antidiagonal notch
            int m = p1;
            if (m < 2 || m % 2 != 0) throw std::invalid_argument("family 4: m must be even");
            Matrix C(m);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    if (i + j <= m + 1 && !(i + j == m && i % 2 == 1 && j % 2 == 1))
                        C.set(i, j, 1);
            return {C};
        }
        case 5: {  // ones strictly below the main diagonal
            int m = p1;
            if (m < 1) throw std::invalid_argument("family 5: m must be >= 1");
            Matrix A(m);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j < i; ++j) A.set(i, j, 1);
            return {A};
        }
        case 6: {  // ones on and below the main diagonal
            int m = p1;
            if (m < 1) throw std::invalid_argument("family 6: m must be >= 1");
            Matrix B(m);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= i; ++j) B.set(i, j, 1);
            return {B};
        }
    }
    throw std::invalid_argument("family_matrix: family must be 1..6");
}

// a_ij = 1 iff i + j <= m + 1.
inline Matrix staircase_matrix(int m) {
    Matrix A(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m + 1 - i; ++j) A.set(i, j, 1);
    return A;
}

}  // namespace treecolor
