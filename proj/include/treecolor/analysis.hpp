#pragma once

#include "treecolor/constructions.hpp"
#include "treecolor/counting.hpp"
#include "treecolor/guess.hpp"
#include "treecolor/polynomial.hpp"
#include "treecolor/series.hpp"

#include <stdexcept>
#include <vector>

namespace treecolor {

// ---- functional-equation checking ----

struct EquationVerdict {
    bool annihilated = false;
    int first_failing_order = -1;  // least n with a nonzero coefficient
};

inline EquationVerdict verify_functional_equation(const BivariatePolynomial& poly,
                                                  const TruncatedSeries& series) {
    TruncatedSeries v = poly.eval(series);
    EquationVerdict out;
    for (int n = 0; n <= v.order; ++n)
        if (v.c[size_t(n)] != 0) {
            out.first_failing_order = n;
            return out;
        }
    out.annihilated = true;
    return out;
}

// ---- construction predictions ----

namespace detail {

inline TruncatedSeries eval_trivariate(const TrivariateIdentity& id, const TruncatedSeries& G,
                                       const TruncatedSeries& F) {
    int N = G.order;
    TruncatedSeries acc(N);
    for (auto& [key, coeff] : id.terms) {
        auto [dg, df, dx] = key;
        TruncatedSeries t = TruncatedSeries::constant(Rat(coeff), N);
        if (dg) t = t * G.pow(dg);
        if (df) t = t * F.pow(df);
        if (dx) t = t.shifted(dx);
        acc += t;
    }
    return acc;
}

}  // namespace detail

struct PredictionVerdict {
    bool holds = false;
    int first_failing_n = -1;
};

// Checks one prediction attached to a composed matrix, to order N.
inline PredictionVerdict verify_prediction(const Matrix& composed, const Prediction& pred,
                                           int N = 20) {
    using K = Prediction::Kind;
    PredictionVerdict out;
    auto fail_at = [&out](int n) {
        out.first_failing_n = n;
        return out;
    };
    SequenceTable table = count_by_root(composed, N);

    switch (pred.kind) {
        case K::total_sum_of_parts: {
            std::vector<SequenceTable> parts;
            for (auto& P : pred.parts) parts.push_back(count_by_root(P, N));
            for (int n = 1; n <= N; ++n) {
                Int s = 0;
                for (auto& pt : parts) s += pt.total[size_t(n)];
                if (table.total[size_t(n)] != s) return fail_at(n);
            }
            break;
        }
        case K::total_scaled: {
            SequenceTable base = count_by_root(pred.base, N);
            for (int n = 1; n <= N; ++n)
                if (table.total[size_t(n)] != int_pow(pred.scale, unsigned(n)) * base.total[size_t(n)])
                    return fail_at(n);
            break;
        }
        case K::per_root_equal_base: {
            SequenceTable base = count_by_root(pred.base, N);
            for (int i = 1; i <= pred.base.m; ++i)
                for (int n = 1; n <= N; ++n)
                    if (table.t(i, n) != base.t(i, n)) return fail_at(n);
            break;
        }
        case K::per_root_x: {
            for (int n = 1; n <= N; ++n)
                if (table.t(pred.color, n) != (n == 1 ? 1 : 0)) return fail_at(n);
            break;
        }
        case K::per_root_catalan: {
            for (int n = 1; n <= N; ++n)
                if (table.t(pred.color, n) != catalan(n - 1)) return fail_at(n);
            break;
        }
        case K::per_root_power: {
            for (int n = 1; n <= N; ++n)
                if (table.t(pred.color, n) != int_pow(pred.scale, unsigned(n - 1))) return fail_at(n);
            break;
        }
        case K::per_root_rational: {
            // F'^(color) = x / (1 - sum_j brow_j F_base^(j))
            std::vector<TruncatedSeries> F = solve_system(pred.base, N);
            TruncatedSeries denom = TruncatedSeries::constant(1, N);
            for (size_t j = 0; j < pred.brow.size(); ++j)
                if (pred.brow[j]) denom -= F[j];
            TruncatedSeries expect = TruncatedSeries::x(N) / denom;
            TruncatedSeries got = series_from_counts(table, pred.color);
            for (int n = 0; n <= N; ++n)
                if (got.c[size_t(n)] != expect.c[size_t(n)]) return fail_at(n);
            break;
        }
        case K::total_identity: {
            TruncatedSeries G = series_from_counts(table, kTotalColor);
            TruncatedSeries F =
                series_from_counts(count_by_root(pred.base, N), kTotalColor);
            TruncatedSeries v = detail::eval_trivariate(pred.identity, G, F);
            for (int n = 0; n <= N; ++n)
                if (v.c[size_t(n)] != 0) return fail_at(n);
            break;
        }
    }
    out.holds = true;
    out.first_failing_n = -1;
    return out;
}

inline bool verify_all_predictions(const AdjoinResult& r, int N = 20) {
    for (auto& p : r.predictions)
        if (!verify_prediction(r.matrix, p, N).holds) return false;
    return true;
}

}  // namespace treecolor
