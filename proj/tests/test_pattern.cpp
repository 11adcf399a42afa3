#include "nsmp/sign_pattern.hpp"
#include "nsmp/spattern.hpp"
#include "nsmp/transform.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nsmp;
using nsmp::testing::TestRng;
using nsmp::testing::random_pattern;

namespace {

PatternTransform random_transform(std::size_t n, TestRng& rng) {
    PatternTransform t = PatternTransform::identity(n);
    for (std::size_t i = n; i > 1; --i)
        std::swap(t.permutation[i - 1],
                  t.permutation[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(i) - 1))]);
    for (auto& s : t.signature) s = rng.chance(50) ? 1 : -1;
    t.transposed = rng.chance(50);
    t.negated = rng.chance(50);
    return t;
}

}  // namespace

TEST_CASE("pattern parsing round-trips and rejects bad input") {
    SignPattern p = parse_pattern("0 + -\n+ 0 0\n- 0 +");
    CHECK(p.size() == 3);
    CHECK(p.at(0, 2) == Sign::Minus);
    CHECK(parse_pattern(p.to_text()) == p);
    CHECK_THROWS_AS(parse_pattern("0 + -\n+ 0"), ParseError);
    CHECK_THROWS_AS(parse_pattern("0 x\n+ 0"), ParseError);
    CHECK_THROWS_AS(parse_pattern("0 + -\n+ 0 0"), ParseError);  // non-square
    CHECK_THROWS_AS(parse_pattern(""), ParseError);
}

TEST_CASE("sampled realizations are qualitative members and deterministic") {
    TestRng rng(3);
    for (int t = 0; t < 20; ++t) {
        SignPattern p = random_pattern(static_cast<std::size_t>(rng.integer(1, 5)), rng);
        RationalMatrix a = sample_realization(p, 42 + t, 10);
        CHECK(qualitative_member(a, p));
        CHECK(pattern_of(a) == p);
        CHECK(sample_realization(p, 42 + t, 10) == a);
        CHECK((sample_realization(p, 43 + t, 10) != a ||
               p.zero_count() == p.size() * p.size()));
    }
}

TEST_CASE("unit realization has unit entries and the right pattern") {
    SignPattern p = parse_pattern("0 + -\n+ 0 0\n- 0 +");
    RationalMatrix u = unit_realization(p);
    CHECK(pattern_of(u) == p);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK((u.at(i, j) == 0 || u.at(i, j) == 1 || u.at(i, j) == -1));
}

TEST_CASE("superpattern relation") {
    SignPattern r = parse_pattern("0 +\n- 0");
    CHECK(is_superpattern(parse_pattern("+ +\n- -"), r));
    CHECK(is_superpattern(r, r));
    CHECK_FALSE(is_superpattern(parse_pattern("0 -\n- 0"), r));
}

TEST_CASE("relaxed symbols admit exactly their subsets") {
    CHECK(symbol_admits(SSymbol::Star, Sign::Plus));
    CHECK(symbol_admits(SSymbol::Star, Sign::Minus));
    CHECK_FALSE(symbol_admits(SSymbol::Star, Sign::Zero));
    CHECK(symbol_admits(SSymbol::NonNeg, Sign::Zero));
    CHECK_FALSE(symbol_admits(SSymbol::NonNeg, Sign::Minus));
    CHECK(symbol_admits(SSymbol::Any, Sign::Minus));
    SPattern t = parse_spattern("0* * 0+\n0 - 0-\n+ 0* 0");
    CHECK(matches_spattern(parse_pattern("+ - 0\n0 - 0\n+ - 0"), t));
    CHECK_FALSE(matches_spattern(parse_pattern("+ 0 0\n0 - 0\n+ - 0"), t));
    CHECK_FALSE(matches_spattern(parse_pattern("+ - -\n0 - 0\n+ - 0"), t));
}

TEST_CASE("transforms compose with their inverses to the identity") {
    TestRng rng(17);
    for (int t = 0; t < 40; ++t) {
        SignPattern p = random_pattern(4, rng);
        PatternTransform tr = random_transform(4, rng);
        SignPattern image = apply_transform(p, tr);
        CHECK(apply_transform(image, tr.inverse()) == p);
    }
    CHECK_THROWS_AS(apply_transform(SignPattern(3), PatternTransform::identity(2)),
                    DimensionMismatch);
}

TEST_CASE("canonical form is an orbit invariant and a lower bound") {
    TestRng rng(29);
    for (int t = 0; t < 25; ++t) {
        SignPattern p = random_pattern(3, rng);
        auto [canon, tr] = canonical_form(p);
        CHECK(apply_transform(p, tr) == canon);
        CHECK((canon < p || canon == p));
        SignPattern image = apply_transform(p, random_transform(3, rng));
        CHECK(canonical_form(image).first == canon);
        CHECK(are_equivalent(p, image));
    }
}

TEST_CASE("inequivalent patterns are told apart") {
    CHECK_FALSE(are_equivalent(parse_pattern("+ 0\n0 0"), parse_pattern("+ +\n0 0")));
    CHECK(are_equivalent(parse_pattern("+ 0\n0 0"), parse_pattern("0 0\n0 -")));
}

TEST_CASE("canonical form refuses large orders") {
    CHECK_THROWS_AS(canonical_form(SignPattern(7)), TooLarge);
}
