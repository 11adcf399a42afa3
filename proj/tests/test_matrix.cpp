#include "nsmp/matrix.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nsmp;
using nsmp::testing::TestRng;
using nsmp::testing::random_matrix;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
Rational det_cofactor(const RationalMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational total(0);
    std::vector<std::size_t> all_rows;
    for (std::size_t i = 1; i < n; ++i) all_rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Rational minor = det_cofactor(m.submatrix(all_rows, cols));
        total += (j % 2 ? -m.at(0, j) : m.at(0, j)) * minor;
    }
    return total;
}

}  // namespace

TEST_CASE("rational parsing accepts integers and fractions") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(format_rational(Rational(-5, 2)) == "-5/2");
    CHECK(format_rational(Rational(4)) == "4");
}

TEST_CASE("rational parsing rejects malformed tokens") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("matrix parsing round-trips through to_text") {
    RationalMatrix a = parse_matrix("1 0\n-3 1/2");
    CHECK(a.rows() == 2);
    CHECK(a.at(1, 1) == Rational(1, 2));
    CHECK(parse_matrix(a.to_text()) == a);
}

TEST_CASE("matrix parsing rejects ragged and empty input") {
    CHECK_THROWS_AS(parse_matrix("1 2\n3"), ParseError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
}

TEST_CASE("arithmetic identities hold on random matrices") {
    TestRng rng(11);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        RationalMatrix a = random_matrix(n, rng);
        RationalMatrix b = random_matrix(n, rng);
        RationalMatrix c = random_matrix(n, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a * RationalMatrix::identity(n) == a);
        CHECK((a - a).is_zero());
        CHECK(a.scaled(Rational(-2)) + a.scaled(Rational(2)) == RationalMatrix::zero(n, n));
        CHECK((a * b).trace() == (b * a).trace());
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    TestRng rng(23);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        RationalMatrix a = random_matrix(n, rng);
        CHECK(determinant(a) == det_cofactor(a));
    }
    CHECK(determinant(RationalMatrix::identity(5)) == Rational(1));
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), NonSquare);
}

TEST_CASE("rank and nullspace are consistent") {
    TestRng rng(37);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.integer(1, 5));
        std::size_t cols = static_cast<std::size_t>(rng.integer(1, 5));
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!rng.chance(40)) m.at(i, j) = Rational(rng.integer(-3, 3));

        std::size_t r = rank(m);
        auto basis = nullspace(m);
        CHECK(basis.size() == cols - r);
        for (const auto& v : basis) {
            CHECK(v.rows() == cols);
            CHECK((m * v).is_zero());
        }
        if (!basis.empty()) {
            // Independence: stack the basis vectors as columns and check rank.
            RationalMatrix stacked(cols, basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (std::size_t i = 0; i < cols; ++i) stacked.at(i, k) = basis[k].at(i, 0);
            CHECK(rank(stacked) == basis.size());
        }
        CHECK(rank(m.transpose()) == r);
    }
}

TEST_CASE("nullspace of a singular fixture") {
    RationalMatrix m = parse_matrix("1 2 3\n2 4 6\n0 0 1");
    CHECK(rank(m) == 2);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK((m * basis[0]).is_zero());
    CHECK_FALSE(basis[0].is_zero());
}

TEST_CASE("power traces match direct computation") {
    TestRng rng(41);
    RationalMatrix a = random_matrix(4, rng);
    auto traces = matrix_power_traces(a, 5);
    REQUIRE(traces.size() == 6);
    RationalMatrix p = RationalMatrix::identity(4);
    for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(traces[k] == p.trace());
        p = p * a;
    }
}
