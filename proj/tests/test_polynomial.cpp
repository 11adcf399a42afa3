#include "nsmp/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nsmp;
using nsmp::testing::TestRng;
using nsmp::testing::random_matrix;

namespace {

// Independent characteristic polynomial oracle: Laplace expansion of
// det(xI - A) over polynomial entries.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * poly_det(minor);
        if (j % 2) term = Polynomial::constant(Rational(-1)) * term;
        total = total + term;
    }
    return total;
}

Polynomial char_poly_oracle(const RationalMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> coeffs{-a.at(i, j)};
            if (i == j) coeffs.push_back(Rational(1));
            m[i][j] = Polynomial(std::move(coeffs));
        }
    return poly_det(m);
}

Polynomial from_ints(std::initializer_list<long long> lowest_first) {
    std::vector<Rational> c;
    for (auto v : lowest_first) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("characteristic polynomial matches determinant expansion") {
    TestRng rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        RationalMatrix a = random_matrix(n, rng);
        CHECK(char_poly(a) == char_poly_oracle(a));
    }
}

TEST_CASE("characteristic polynomial of a companion-style fixture") {
    RationalMatrix a = parse_matrix("0 1 0\n3 0 1\n2 0 0");
    CHECK(char_poly(a) == from_ints({-2, -3, 0, 1}));  // x^3 - 3x - 2
}

TEST_CASE("Cayley-Hamilton holds for the computed polynomial") {
    TestRng rng(13);
    for (int t = 0; t < 10; ++t) {
        RationalMatrix a = random_matrix(4, rng);
        CHECK(char_poly(a).eval(a).is_zero());
    }
}

TEST_CASE("polynomial gcd divides both arguments and is monic") {
    Polynomial p = from_ints({1, 2, 1});       // (x+1)^2
    Polynomial q = from_ints({-2, -1, 1});     // (x+1)(x-2)
    Polynomial g = poly_gcd(p, q);
    CHECK(g == from_ints({1, 1}));             // x+1
    CHECK(p.remainder(g).is_zero());
    CHECK(q.remainder(g).is_zero());
    CHECK(g.leading() == Rational(1));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), BothZero);
}

TEST_CASE("squarefree detection") {
    CHECK_FALSE(is_squarefree(from_ints({1, 2, 1})));                // (x+1)^2
    CHECK(is_squarefree(from_ints({0, -1, 0, 1})));                  // x^3 - x
    CHECK_FALSE(is_squarefree(from_ints({-2, -3, 0, 1})));           // (x+1)^2 (x-2)
    CHECK(is_squarefree(from_ints({1, 0, 1})));                      // x^2 + 1
    Polynomial scaled = Polynomial::constant(Rational(5)) * from_ints({1, 2, 1});
    CHECK_FALSE(is_squarefree(scaled));
}

TEST_CASE("rational roots are exact and complete") {
    CHECK(rational_roots(from_ints({-2, -3, 0, 1})) ==
          std::vector<Rational>{Rational(-1), Rational(2)});
    CHECK(rational_roots(from_ints({1, -3, 2})) ==
          std::vector<Rational>{Rational(1, 2), Rational(1)});  // 2x^2-3x+1
    CHECK(rational_roots(from_ints({1, 0, 1})).empty());
    // Non-integer leading coefficient and content.
    Polynomial p = Polynomial(std::vector<Rational>{Rational(-1, 6), Rational(1, 2)});  // x/2-1/6
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(1, 3)});
}

TEST_CASE("polynomial arithmetic basics") {
    Polynomial p = from_ints({1, 1});
    CHECK((p * p) == from_ints({1, 2, 1}));
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(from_ints({2, 4}).monic() == Polynomial(std::vector<Rational>{Rational(1, 2), Rational(1)}));
    CHECK(from_ints({1, 2, 3}).derivative() == from_ints({2, 6}));
    CHECK(from_ints({-2, 0, 1}).eval(Rational(3)) == Rational(7));
}
