#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "treecolor/analysis.hpp"
#include "treecolor/closed_forms.hpp"

using namespace treecolor;

namespace {

Matrix M(const std::string& text) { return parse_matrix(text); }

std::vector<Int> ints(std::initializer_list<long long> vals) {
    return std::vector<Int>(vals.begin(), vals.end());
}

// First expect.size() coefficients of a series, lowest order first.
void check_coeffs(const TruncatedSeries& s, const std::vector<long long>& expect) {
    REQUIRE(size_t(s.order) + 1 >= expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(s.c[i] == Rat(expect[i]));
}

std::vector<Int> root_terms(const Matrix& A, int color, int N) {
    SequenceTable table = count_by_root(A, N);
    std::vector<Int> out;
    for (int n = 1; n <= N; ++n) out.push_back(table.t(color, n));
    return out;
}

Int eval_poly_at(const std::vector<Int>& coeffs, long n) {
    Int acc = 0, pw = 1;
    for (const auto& co : coeffs) {
        acc += co * pw;
        pw *= n;
    }
    return acc;
}

}  // namespace

// ---- series extraction ----

TEST_CASE("series from count tables") {
    check_coeffs(series_from_counts(count_by_root(M("11;00"), 5), kTotalColor),
                 {0, 2, 2, 6, 22, 90});
    check_coeffs(series_from_counts(count_by_root(M("11;00"), 5), 1), {0, 1, 2, 6, 22, 90});
    check_coeffs(series_from_counts(count_by_root(M("11;00"), 5), 2), {0, 1, 0, 0, 0, 0});

    check_coeffs(series_from_counts(count_by_root(M("1"), 5), 1), {0, 1, 1, 2, 5, 14});

    check_coeffs(series_from_counts(count_by_root(M("000;000;000"), 4), kTotalColor),
                 {0, 3, 0, 0, 0});

    SequenceTable table = count_by_root(M("11;10"), 4);
    CHECK_THROWS_AS(series_from_counts(table, 3), std::invalid_argument);
    CHECK_THROWS_AS(series_from_counts(table, -1), std::invalid_argument);
}

// ---- functional equation verdicts ----

TEST_CASE("functional equation verdicts") {
    TruncatedSeries schroder = solve_system(M("11;00"), 30)[0];
    EquationVerdict v = verify_functional_equation(parse_polynomial("F^2 + (x - 1)*F + x"),
                                                   schroder);
    CHECK(v.annihilated);
    CHECK(v.first_failing_order == -1);

    TruncatedSeries cat = solve_system(M("1"), 30)[0];
    CHECK(verify_functional_equation(parse_polynomial("F^2 - F + x"), cat).annihilated);

    TruncatedSeries dser = solve_system(M("11;01"), 30)[0];
    check_coeffs(dser, {0, 1, 2, 7, 29, 131});
    CHECK(verify_functional_equation(
              parse_polynomial("F^4 - F^3 + 3*x*F^2 - x*F + x^2"), dser)
              .annihilated);

    EquationVerdict bad = verify_functional_equation(parse_polynomial("F^2 - F + x"), dser);
    CHECK_FALSE(bad.annihilated);
    CHECK(bad.first_failing_order == 2);

    EquationVerdict off = verify_functional_equation(parse_polynomial("F - x"), cat);
    CHECK_FALSE(off.annihilated);
    CHECK(off.first_failing_order == 2);

    // Rational case: x/(1-x) is killed by (1-x)F - x.
    TruncatedSeries geo = solve_system(M("01;00"), 20)[0];
    CHECK(verify_functional_equation(parse_polynomial("(1 - x)*F - x"), geo).annihilated);
}

// ---- system solving ----

TEST_CASE("power-series system solution examples") {
    check_coeffs(solve_system(M("11;10"), 5)[0], {0, 1, 2, 7, 30, 143});
    check_coeffs(solve_system(M("11;01"), 5)[0], {0, 1, 2, 7, 29, 131});

    std::vector<TruncatedSeries> z = solve_system(M("000;000;000"), 8);
    REQUIRE(z.size() == 3);
    TruncatedSeries just_x = TruncatedSeries::x(8);
    for (auto& s : z)
        for (int n = 0; n <= 8; ++n) CHECK(s.c[size_t(n)] == just_x.c[size_t(n)]);

    CHECK_THROWS_AS(solve_system(M("1"), 0), std::invalid_argument);
}

TEST_CASE("system solution matches the counting engine") {
    const int N = 8;
    for (const Matrix& A : all_matrices(3)) {
        std::vector<TruncatedSeries> F = solve_system(A, N);
        SequenceTable table = count_by_root(A, N);
        for (int i = 1; i <= 3; ++i) {
            TruncatedSeries want = series_from_counts(table, i);
            for (int n = 0; n <= N; ++n) {
                if (F[size_t(i) - 1].c[size_t(n)] != want.c[size_t(n)]) {
                    CAPTURE(to_text(A), i, n);
                    REQUIRE(F[size_t(i) - 1].c[size_t(n)] == want.c[size_t(n)]);
                }
            }
        }
    }

    // Deeper spot checks on a few matrices.
    for (const char* text : {"111;010;001", "110;100;010", "011;101;110", "111;111;111"}) {
        Matrix A = M(text);
        std::vector<TruncatedSeries> F = solve_system(A, 14);
        SequenceTable table = count_by_root(A, 14);
        for (int i = 1; i <= 3; ++i)
            for (int n = 1; n <= 14; ++n)
                CHECK(F[size_t(i) - 1].c[size_t(n)] == Rat(table.t(i, n)));
    }
}

// ---- hypergeometric ratio fitting ----

TEST_CASE("hypergeometric guess on Catalan") {
    std::vector<Int> cat;
    for (long n = 1; n <= 24; ++n) cat.push_back(catalan(n - 1));
    auto g = guess_hypergeometric(cat);
    REQUIRE(g.has_value());
    CHECK(g->p == ints({-6, 4}));
    CHECK(g->q == ints({0, 1}));
    CHECK(g->valid_from == 2);
    for (size_t t = 1; t < cat.size(); ++t) {
        long n = long(t) + 1;
        if (n < g->valid_from) continue;
        CHECK(eval_poly_at(g->q, n) * cat[t] == eval_poly_at(g->p, n) * cat[t - 1]);
    }
}

TEST_CASE("hypergeometric guess rejections") {
    std::vector<Int> mixed;
    for (long n = 1; n <= 24; ++n) mixed.push_back((int_pow(2, n) + 1) * catalan(n - 1));
    CHECK_FALSE(guess_hypergeometric(mixed).has_value());

    std::vector<Int> schroder = root_terms(M("11;00"), 1, 24);
    CHECK(schroder[0] == 1);
    CHECK(schroder[5] == 394);
    CHECK_FALSE(guess_hypergeometric(schroder).has_value());

    std::vector<Int> flat(24, Int(5));
    CHECK_FALSE(guess_hypergeometric(flat).has_value());

    std::vector<Int> holed = ints({1, 0, 1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK_FALSE(guess_hypergeometric(holed).has_value());

    std::vector<Int> zeros(24, Int(0));
    CHECK_FALSE(guess_hypergeometric(zeros).has_value());

    std::vector<Int> short_cat;
    for (long n = 1; n <= 10; ++n) short_cat.push_back(catalan(n - 1));
    CHECK_FALSE(guess_hypergeometric(short_cat).has_value());
}

TEST_CASE("hypergeometric guess skips leading zeros") {
    std::vector<Int> shifted(2, Int(0));
    for (long k = 0; k <= 21; ++k) shifted.push_back(catalan(k));
    auto g = guess_hypergeometric(shifted);
    REQUIRE(g.has_value());
    CHECK(g->valid_from == 4);
    CHECK(g->p == ints({-14, 4}));
    CHECK(g->q == ints({-2, 1}));
}

// ---- linear recurrence fitting ----

TEST_CASE("linear recurrence guess examples") {
    std::vector<Int> odd_fib;
    for (long n = 1; n <= 12; ++n) odd_fib.push_back(fibonacci(2 * n - 1));
    CHECK(odd_fib[0] == 1);
    CHECK(odd_fib[1] == 2);
    CHECK(odd_fib[5] == 89);
    auto r = guess_linear_recurrence(odd_fib);
    REQUIRE(r.has_value());
    CHECK(r->order() == 2);
    CHECK(r->coeffs == std::vector<Rat>{Rat(3), Rat(-1)});
    CHECK(r->characteristic() == ints({1, -3, 1}));

    std::vector<Int> flat(10, Int(1));
    auto c = guess_linear_recurrence(flat);
    REQUIRE(c.has_value());
    CHECK(c->order() == 1);
    CHECK(c->coeffs == std::vector<Rat>{Rat(1)});
    CHECK(c->characteristic() == ints({1, -1}));

    std::vector<Int> geo;
    for (long n = 1; n <= 12; ++n) geo.push_back(int_pow(3, n));
    auto g = guess_linear_recurrence(geo);
    REQUIRE(g.has_value());
    CHECK(g->order() == 1);
    CHECK(g->characteristic() == ints({1, -3}));
}

TEST_CASE("linear recurrence guess rejections") {
    std::vector<Int> cat;
    for (long n = 1; n <= 24; ++n) cat.push_back(catalan(n - 1));
    CHECK_FALSE(guess_linear_recurrence(cat).has_value());

    std::vector<Int> tiny = ints({1, 2, 5, 13, 34, 89});
    CHECK_FALSE(guess_linear_recurrence(tiny).has_value());
}

// ---- palindromic check ----

TEST_CASE("palindromic coefficient lists") {
    CHECK(check_palindromic(ints({1, -7, 13, -7, 1})));
    CHECK(check_palindromic(ints({1, -3, 1})));
    CHECK_FALSE(check_palindromic(ints({1, -1})));
    CHECK(check_palindromic(ints({5})));
    CHECK(check_palindromic(ints({2, 3, 3, 2})));
    CHECK_FALSE(check_palindromic(ints({1, 2, 3})));

    for (int m = 3; m <= 6; ++m) CHECK(check_palindromic(family5_polys(m).q));
    CHECK_FALSE(check_palindromic(family5_polys(2).q));
}

// ---- family 5 rational structure ----

TEST_CASE("family 5 row satisfies its denominator recurrence") {
    const int N = 24;
    for (int m = 1; m <= 6; ++m) {
        Family5Polys fp = family5_polys(m);
        Matrix A = family_matrix(5, m)[0];
        TruncatedSeries row = series_from_counts(count_by_root(A, N), m);
        int dq = int(fp.q.size()) - 1;
        int dp = int(fp.p.size()) - 1;
        for (int n = std::max(dp, dq) + 1; n <= N; ++n) {
            Rat acc = 0;
            for (int i = 0; i <= dq; ++i) acc += Rat(fp.q[size_t(i)]) * row.c[size_t(n - i)];
            CAPTURE(m, n);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("recurrence guess recovers family 5 denominators") {
    {
        std::vector<Int> seq = root_terms(family_matrix(5, 4)[0], 4, 24);
        auto r = guess_linear_recurrence(seq);
        REQUIRE(r.has_value());
        CHECK(r->order() == 4);
        CHECK(r->characteristic() == ints({1, -7, 13, -7, 1}));
        CHECK(r->characteristic() == family5_polys(4).q);
    }
    {
        std::vector<Int> seq = root_terms(family_matrix(5, 5)[0], 5, 30);
        auto r = guess_linear_recurrence(seq);
        REQUIRE(r.has_value());
        CHECK(r->order() == 8);
        CHECK(r->characteristic() == family5_polys(5).q);
    }
    {
        std::vector<Int> seq = root_terms(family_matrix(5, 3)[0], 3, 24);
        auto r = guess_linear_recurrence(seq);
        REQUIRE(r.has_value());
        CHECK(r->order() == 2);
        CHECK(r->characteristic() == family5_polys(3).q);
    }
}

// ---- family 6 nested up-sets ----

TEST_CASE("family 6 top series identity and annihilator") {
    const int N = 24;
    for (int m = 1; m <= 4; ++m) {
        Matrix B = family_matrix(6, m)[0];
        std::vector<TruncatedSeries> F = solve_system(B, N);
        TruncatedSeries denom = TruncatedSeries::constant(1, N);
        for (int i = 0; i < m; ++i) denom -= F[size_t(i)];
        TruncatedSeries prod = F[size_t(m) - 1] * denom;
        TruncatedSeries just_x = TruncatedSeries::x(N);
        for (int n = 0; n <= N; ++n) {
            CAPTURE(m, n);
            CHECK(prod.c[size_t(n)] == just_x.c[size_t(n)]);
        }

        EquationVerdict v =
            verify_functional_equation(family6_polys(m).relation, F[size_t(m) - 1]);
        CAPTURE(m);
        CHECK(v.annihilated);
    }

    check_coeffs(solve_system(family_matrix(6, 3)[0], 5)[2], {0, 1, 3, 15, 87});
}

// ---- prediction verdicts ----

TEST_CASE("prediction verdicts report failures") {
    Prediction p;
    p.kind = Prediction::Kind::per_root_x;
    p.color = 1;

    PredictionVerdict ok = verify_prediction(M("000;000;000"), p, 8);
    CHECK(ok.holds);
    CHECK(ok.first_failing_n == -1);

    PredictionVerdict bad = verify_prediction(M("11;10"), p, 8);
    CHECK_FALSE(bad.holds);
    CHECK(bad.first_failing_n == 2);
}
