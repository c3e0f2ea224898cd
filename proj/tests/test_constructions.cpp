#include <catch2/catch_amalgamated.hpp>

#include "treecolor/analysis.hpp"
#include "treecolor/constructions.hpp"
#include "treecolor/equivalence.hpp"

#include <string>
#include <vector>

using namespace treecolor;

namespace {

Matrix M(const std::string& text) { return parse_matrix(text); }

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

// ---- block diagonal ----

TEST_CASE("block_diagonal composes parts along the diagonal") {
    Matrix D = block_diagonal({M("1"), M("11;00")});
    CHECK(to_text(D) == "100;011;000");

    // Totals add up: C_{n-1} + the Schroeder-type totals.
    CHECK(count_total(D, 4) == ints({3, 3, 8, 27}));

    CHECK(to_text(block_diagonal({M("0")})) == "0");
    CHECK(to_text(block_diagonal({M("1"), M("1")})) == "10;01");
    for (int n = 1; n <= 8; ++n)
        CHECK(count_total(M("10;01"), 8)[size_t(n) - 1] == 2 * catalan(n - 1));

    CHECK_THROWS_AS(block_diagonal({}), std::invalid_argument);
}

TEST_CASE("block_diagonal totals are the sums of the part totals") {
    BlockSpec spec{Construction::diagonal};
    spec.parts = {M("1"), M("11;00")};
    auto r = adjoin(spec);
    CHECK(to_text(r.matrix) == "100;011;000");
    REQUIRE(r.predictions.size() == 1);
    CHECK(r.predictions[0].kind == Prediction::Kind::total_sum_of_parts);
    CHECK(verify_all_predictions(r, 20));
}

// ---- blowup ----

TEST_CASE("blowup inflates bits to constant blocks") {
    CHECK(to_text(blowup(M("1"), 2)) == "11;11");
    CHECK(to_text(blowup(M("1"), 3)) == "111;111;111");
    CHECK(to_text(blowup(M("11;00"), 2)) == "1111;1111;0000;0000");
    CHECK(blowup(M("110;011;100"), 1) == M("110;011;100"));
    CHECK_THROWS_AS(blowup(M("1"), 0), std::invalid_argument);

    // t(n) = k^n C_{n-1} for the blowups of the 1x1 ones matrix.
    auto t2 = count_total(M("11;11"), 8);
    auto t3 = count_total(blowup(M("1"), 3), 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(t2[size_t(n) - 1] == int_pow(2, n) * catalan(n - 1));
        CHECK(t3[size_t(n) - 1] == int_pow(3, n) * catalan(n - 1));
    }
}

TEST_CASE("blowup scales every total by k^n") {
    for (const char* text : {"11;10", "111;010;001", "000;101;101"}) {
        BlockSpec spec{Construction::blowup};
        spec.base = M(text);
        spec.k = 2;
        auto r = adjoin(spec);
        CHECK(r.matrix == blowup(spec.base, 2));
        REQUIRE(r.predictions.size() == 1);
        CHECK(r.predictions[0].kind == Prediction::Kind::total_scaled);
        CHECK(verify_all_predictions(r, 14));
    }
}

TEST_CASE("blowup preserves strict equivalence") {
    Matrix A = M("111;010;001");
    Matrix B = apply_rewrite(A, {3, {2}, {3}});
    REQUIRE(strictly_equivalent(A, B, 12).equivalent());
    for (int k = 2; k <= 3; ++k)
        CHECK(strictly_equivalent(blowup(A, k), blowup(B, k), 12).equivalent());
}

// ---- adjoined templates: composed shapes ----

TEST_CASE("adjoin places the base in the leading block") {
    Matrix A = M("11;10");

    BlockSpec lower{Construction::lower_block};
    lower.base = A;
    lower.B = {{1, 0}};
    lower.C = M("1");
    CHECK(to_text(adjoin(lower).matrix) == "110;100;101");

    BlockSpec root{Construction::root_only};
    root.base = A;
    root.m_prime = 1;
    root.B = {{1, 1}};
    CHECK(to_text(adjoin(root).matrix) == "110;100;110");

    BlockSpec up{Construction::up_set};
    up.base = A;
    up.m_prime = 1;
    CHECK(to_text(adjoin(up).matrix) == "110;100;111");

    BlockSpec sep{Construction::separate_up_sets};
    sep.base = A;
    sep.m_prime = 2;
    CHECK(to_text(adjoin(sep).matrix) == "1100;1000;1110;1101");

    BlockSpec zero{Construction::zero_rows};
    zero.base = A;
    zero.m_prime = 1;
    zero.B = {{1}, {0}};
    CHECK(to_text(adjoin(zero).matrix) == "111;100;000");

    BlockSpec cat{Construction::cat_rows};
    cat.base = A;
    cat.m_prime = 1;
    cat.B = {{0}, {1}};
    CHECK(to_text(adjoin(cat).matrix) == "110;101;001");

    BlockSpec unus{Construction::unusable};
    unus.base = A;
    unus.m_prime = 2;
    CHECK(to_text(adjoin(unus).matrix) == "1100;1000;0000;0000");

    BlockSpec single{Construction::singleton};
    single.base = M("1");
    single.A2 = {{1, 1}};
    single.B = {{1, 1}, {0, 1}};
    CHECK(to_text(adjoin(single).matrix) == "11100;00000;00000;01100;00100");
}

TEST_CASE("adjoin rejects mismatched blocks") {
    Matrix A = M("11;10");

    BlockSpec root{Construction::root_only};
    root.base = A;
    root.m_prime = 1;
    root.B = {{1, 1, 1}};
    CHECK_THROWS_AS(adjoin(root), std::invalid_argument);

    BlockSpec lower{Construction::lower_block};
    lower.base = A;
    lower.B = {{1, 0}, {0, 1}};
    lower.C = M("1");
    CHECK_THROWS_AS(adjoin(lower), std::invalid_argument);

    BlockSpec zero{Construction::zero_rows};
    zero.base = A;
    zero.m_prime = 2;
    zero.B = {{1}, {0}};
    CHECK_THROWS_AS(adjoin(zero), std::invalid_argument);

    BlockSpec single{Construction::singleton};
    single.base = M("1");
    CHECK_THROWS_AS(adjoin(single), std::invalid_argument);
}

// ---- adjoined templates: predicted sequences ----

TEST_CASE("root-only colors satisfy the rational series identity") {
    BlockSpec spec{Construction::root_only};
    spec.base = M("11;10");
    spec.m_prime = 1;
    spec.B = {{1, 1}};
    auto r = adjoin(spec);
    REQUIRE(r.predictions.size() == 3);
    CHECK(r.predictions[0].kind == Prediction::Kind::per_root_equal_base);
    CHECK(r.predictions[1].kind == Prediction::Kind::per_root_rational);
    CHECK(r.predictions[2].kind == Prediction::Kind::total_identity);
    CHECK(verify_all_predictions(r, 20));
}

TEST_CASE("zero rows adjoin single-vertex colors") {
    BlockSpec spec{Construction::zero_rows};
    spec.base = M("111;010;001");
    spec.m_prime = 2;
    spec.B = {{1, 0}, {1, 1}, {0, 1}};
    auto r = adjoin(spec);
    REQUIRE(r.predictions.size() == 2);
    for (auto& p : r.predictions) CHECK(p.kind == Prediction::Kind::per_root_x);
    CHECK(verify_all_predictions(r, 20));

    auto t = count_by_root(r.matrix, 6);
    for (int c = 4; c <= 5; ++c)
        for (int n = 1; n <= 6; ++n) CHECK(t.t(c, n) == (n == 1 ? 1 : 0));
}

TEST_CASE("cat rows adjoin Catalan colors") {
    BlockSpec spec{Construction::cat_rows};
    spec.base = M("11;10");
    spec.m_prime = 2;
    spec.B = {{1, 0}, {0, 1}};
    auto r = adjoin(spec);
    CHECK(verify_all_predictions(r, 20));

    auto t = count_by_root(r.matrix, 8);
    for (int c = 3; c <= 4; ++c)
        for (int n = 1; n <= 8; ++n) CHECK(t.t(c, n) == catalan(n - 1));
}

TEST_CASE("the up-set adjunction on the empty rule gives Schroeder totals") {
    BlockSpec spec{Construction::up_set};
    spec.base = M("0");
    spec.m_prime = 1;
    auto r = adjoin(spec);
    CHECK(to_text(r.matrix) == "00;11");
    CHECK(count_total(r.matrix, 5) == ints({2, 2, 6, 22, 90}));
    CHECK(verify_all_predictions(r, 20));
}

TEST_CASE("singleton colors contribute geometric root sequences") {
    BlockSpec spec{Construction::singleton};
    spec.base = M("1");
    spec.A2 = {{1, 1}};
    spec.B = {{1, 1}, {0, 1}};
    auto r = adjoin(spec);
    CHECK(verify_all_predictions(r, 20));

    auto t = count_by_root(r.matrix, 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(t.t(4, n) == int_pow(2, n - 1));
        CHECK(t.t(5, n) == 1);
    }
}

// ---- prediction sweep over catalog bases ----

namespace {

std::vector<AdjoinResult> all_adjunctions(const Matrix& A) {
    std::vector<AdjoinResult> out;
    int m = A.m;

    BlockSpec diag{Construction::diagonal};
    diag.parts = {A, M("1")};
    out.push_back(adjoin(diag));

    BlockSpec blow{Construction::blowup};
    blow.base = A;
    blow.k = 2;
    out.push_back(adjoin(blow));

    BitBlock ones_row(1, std::vector<uint8_t>(size_t(m), 1));
    BitBlock mixed(2, std::vector<uint8_t>(size_t(m), 1));
    for (int j = 0; j < m; ++j) mixed[1][size_t(j)] = uint8_t(j % 2);

    BlockSpec lower{Construction::lower_block};
    lower.base = A;
    lower.B = ones_row;
    lower.C = M("1");
    out.push_back(adjoin(lower));

    BlockSpec root{Construction::root_only};
    root.base = A;
    root.m_prime = 2;
    root.B = mixed;
    out.push_back(adjoin(root));

    BlockSpec all_ones_root{Construction::root_only};
    all_ones_root.base = A;
    all_ones_root.m_prime = 1;
    all_ones_root.B = ones_row;
    out.push_back(adjoin(all_ones_root));

    BlockSpec up{Construction::up_set};
    up.base = A;
    up.m_prime = 2;
    out.push_back(adjoin(up));

    BlockSpec sep{Construction::separate_up_sets};
    sep.base = A;
    sep.m_prime = 2;
    out.push_back(adjoin(sep));

    BitBlock tall(size_t(m), {1, 0});
    for (int i = 0; i < m; ++i) tall[size_t(i)][1] = uint8_t(i % 2);

    BlockSpec zero{Construction::zero_rows};
    zero.base = A;
    zero.m_prime = 2;
    zero.B = tall;
    out.push_back(adjoin(zero));

    BlockSpec cat{Construction::cat_rows};
    cat.base = A;
    cat.m_prime = 2;
    cat.B = tall;
    out.push_back(adjoin(cat));

    BlockSpec unus{Construction::unusable};
    unus.base = A;
    unus.m_prime = 2;
    out.push_back(adjoin(unus));

    BlockSpec single{Construction::singleton};
    single.base = A;
    single.A2 = tall;
    single.B = {{1, 1}, {0, 1}};
    out.push_back(adjoin(single));

    return out;
}

}  // namespace

TEST_CASE("every adjunction prediction holds over the two-color catalog") {
    for (const Matrix& A : classify_all(2, 12).iso_classes)
        for (const auto& r : all_adjunctions(A)) CHECK(verify_all_predictions(r, 20));
}

TEST_CASE("every adjunction prediction holds on sampled three-color bases") {
    for (const char* text :
         {"000;000;000", "100;010;001", "111;010;001", "000;101;101", "111;110;100"})
        for (const auto& r : all_adjunctions(M(text))) CHECK(verify_all_predictions(r, 20));
}

// ---- parameterized families ----

TEST_CASE("family 1 and 2 templates") {
    CHECK(to_text(family_matrix(1, 1, 1).at(0)) == "11;00");
    CHECK(to_text(family_matrix(1, 2, 1).at(0)) == "111;111;000");
    CHECK(to_text(family_matrix(2, 1, 1).at(0)) == "11;10");
    CHECK(to_text(family_matrix(2, 2, 1).at(0)) == "111;111;110");
    CHECK(to_text(family_matrix(2, 1, 2).at(0)) == "111;100;100");
    CHECK_THROWS_AS(family_matrix(1, 0, 3), std::invalid_argument);
}

TEST_CASE("family 3 pair is tree but not strongly equivalent") {
    auto pair4 = family_matrix(3, 4);
    REQUIRE(pair4.size() == 2);
    CHECK(to_text(pair4[0]) == "0000;0000;0100;1100");
    CHECK(to_text(pair4[1]) == "0000;0001;0001;1000");

    // t(1) = m, then 2^{n-1} + m - 3.
    auto want = [](int m, int n) { return n == 1 ? Int(m) : int_pow(2, n - 1) + m - 3; };
    for (int m = 4; m <= 8; ++m) {
        auto pair = family_matrix(3, m);
        auto ta = count_total(pair[0], 8), tb = count_total(pair[1], 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(ta[size_t(n) - 1] == want(m, n));
            CHECK(tb[size_t(n) - 1] == want(m, n));
        }
        CHECK(tree_coloring_equivalent(pair[0], pair[1], 12).equivalent());
        CHECK_FALSE(strongly_equivalent(pair[0], pair[1], 12).equivalent());
    }

    // Brute force confirms the small orders.
    for (int n = 1; n <= 5; ++n) {
        auto counts = brute_force_counts(family_matrix(3, 4)[0], n);
        Int total = 0;
        for (auto& c : counts) total += c;
        CHECK(total == want(4, n));
    }

    CHECK_THROWS_AS(family_matrix(3, 3), std::invalid_argument);
}

TEST_CASE("family 4 reproduces the printed six-color matrix") {
    auto C6 = family_matrix(4, 6).at(0);
    CHECK(to_text(C6) == "111101;111110;110100;111000;010000;100000");
    CHECK(necessary_invariants(C6).ones_total == 18);
    CHECK(count_total(C6, 2)[1] == 18);

    CHECK(to_text(family_matrix(4, 2).at(0)) == "01;10");
    CHECK(to_text(family_matrix(4, 4).at(0)) == "1101;1110;0100;1000");
    CHECK_THROWS_AS(family_matrix(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(family_matrix(4, 0), std::invalid_argument);
}

TEST_CASE("family 4 pairs up interchangeable colors") {
    for (int m : {4, 6}) {
        Matrix C = family_matrix(4, m).at(0);
        auto t = count_by_root(C, 12);
        for (int j = 1; 2 * j <= m; ++j)
            for (int n = 1; n <= 12; ++n) CHECK(t.t(2 * j - 1, n) == t.t(2 * j, n));

        // find_rewrites exposes each pair through some singleton move.
        auto moves = find_rewrites(C, 12);
        for (int j = 1; 2 * j <= m; ++j) {
            bool seen = false;
            for (const auto& mv : moves) {
                if (mv.set_I.size() != 1) continue;
                int i = mv.set_I[0], k = mv.set_J[0];
                if (std::min(i, k) == 2 * j - 1 && std::max(i, k) == 2 * j) seen = true;
            }
            CHECK(seen);
        }
    }
}

TEST_CASE("families 5 and 6 are the triangular templates") {
    CHECK(to_text(family_matrix(5, 2).at(0)) == "00;10");
    CHECK(to_text(family_matrix(5, 3).at(0)) == "000;100;110");
    CHECK(to_text(family_matrix(6, 1).at(0)) == "1");
    CHECK(to_text(family_matrix(6, 3).at(0)) == "100;110;111");

    // Two colors: the root-color sequences are x and the constant 1.
    auto t = count_by_root(family_matrix(5, 2).at(0), 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(t.t(1, n) == (n == 1 ? 1 : 0));
        CHECK(t.t(2, n) == 1);
    }

    CHECK_THROWS_AS(family_matrix(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_matrix(7, 3), std::invalid_argument);
}

TEST_CASE("staircase matrices") {
    CHECK(to_text(staircase_matrix(1)) == "1");
    CHECK(to_text(staircase_matrix(3)) == "111;110;100");
    CHECK(to_text(staircase_matrix(4)) == "1111;1110;1100;1000");
}
