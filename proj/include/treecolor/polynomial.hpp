#pragma once

#include "treecolor/numeric.hpp"
#include "treecolor/series.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace treecolor {

// ---- bivariate polynomials in F and x ----

struct BivariatePolynomial {
    // (degree in F, degree in x) -> integer coefficient; zero coefficients
    // are not stored.
    std::map<std::pair<int, int>, Int> terms;

    void add_term(int df, int dx, const Int& coeff) {
        if (coeff == 0) return;
        auto key = std::make_pair(df, dx);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (auto& [k, v] : o.terms) add_term(k.first, k.second, v);
        return *this;
    }
    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (auto& [k, v] : o.terms) add_term(k.first, k.second, -v);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a -= b;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (auto& [ka, va] : a.terms)
            for (auto& [kb, vb] : b.terms)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }

    BivariatePolynomial pow(int e) const {
        BivariatePolynomial r;
        r.add_term(0, 0, 1);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    int degree_in_F() const {
        int d = 0;
        for (auto& [k, v] : terms) d = std::max(d, k.first);
        return d;
    }

    // Exact evaluation at F = f, x = the indeterminate, to order f.order.
    TruncatedSeries eval(const TruncatedSeries& f) const {
        int N = f.order;
        int D = degree_in_F();
        std::vector<TruncatedSeries> powF;
        powF.push_back(TruncatedSeries::constant(1, N));
        for (int d = 1; d <= D; ++d) powF.push_back(powF.back() * f);
        TruncatedSeries out(N);
        for (auto& [k, v] : terms) {
            auto [df, dx] = k;
            if (dx > N) continue;
            TruncatedSeries contrib = Rat(v) * powF[df].shifted(dx);
            out += contrib;
        }
        return out;
    }

    bool operator==(const BivariatePolynomial& o) const { return terms == o.terms; }
};

// ---- text grammar ----
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' factor) | factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 'F' | 'x' | '(' expr ')'
//
// e.g. "F^2 + (x - 1)*F + x".

namespace detail {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    BivariatePolynomial parse() {
        BivariatePolynomial p = expr();
        skip();
        if (pos != s.size())
            throw std::invalid_argument("polynomial parse error at position " +
                                        std::to_string(pos) + " in \"" + s + "\"");
        return p;
    }

    BivariatePolynomial expr() {
        skip();
        bool neg = eat('-');
        BivariatePolynomial acc = term();
        if (neg) {
            BivariatePolynomial z;
            z -= acc;
            acc = z;
        }
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    BivariatePolynomial term() {
        BivariatePolynomial acc = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc * factor();
            } else if (pos < s.size() &&
                       (s[pos] == 'F' || s[pos] == 'x' || s[pos] == '(' ||
                        std::isdigit((unsigned char)s[pos]))) {
                acc = acc * factor();  // adjacency is multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    BivariatePolynomial factor() {
        BivariatePolynomial base = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) throw std::invalid_argument("expected integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            base = base.pow(e);
        }
        return base;
    }

    BivariatePolynomial atom() {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of polynomial");
        char ch = s[pos];
        BivariatePolynomial p;
        if (ch == 'F') {
            ++pos;
            p.add_term(1, 0, 1);
            return p;
        }
        if (ch == 'x') {
            ++pos;
            p.add_term(0, 1, 1);
            return p;
        }
        if (std::isdigit((unsigned char)ch)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            p.add_term(0, 0, Int(s.substr(start, pos - start)));
            return p;
        }
        if (ch == '(') {
            ++pos;
            p = expr();
            if (!eat(')')) throw std::invalid_argument("expected ')'");
            return p;
        }
        throw std::invalid_argument(std::string("unexpected character '") + ch +
                                    "' in polynomial");
    }
};

}  // namespace detail

inline BivariatePolynomial parse_polynomial(const std::string& text) {
    detail::PolyParser p(text);
    return p.parse();
}

}  // namespace treecolor
