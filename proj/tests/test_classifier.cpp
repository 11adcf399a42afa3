#include "nsmp/classifier.hpp"
#include "nsmp/fixtures.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nsmp;
using nsmp::testing::TestRng;
using nsmp::testing::random_pattern;

TEST_CASE("allowing the property is a composite-cycle condition") {
    CHECK(allows_nsmp(parse_pattern("0")) == AllowVerdict::Allows);
    CHECK(allows_nsmp(parse_pattern("0 +\n0 0")) == AllowVerdict::DoesNotAllow);
    CHECK(allows_nsmp(parse_pattern("0 +\n+ 0")) == AllowVerdict::Allows);
    // Order-4 star: needs a composite 3-cycle, i.e. a loop outside one 2-cycle.
    SignPattern star(4);
    for (std::size_t v = 1; v < 4; ++v) {
        star.at(0, v) = Sign::Plus;
        star.at(v, 0) = Sign::Plus;
    }
    CHECK(allows_nsmp(star) == AllowVerdict::DoesNotAllow);
    star.at(1, 1) = Sign::Plus;
    CHECK(allows_nsmp(star) == AllowVerdict::Allows);
}

TEST_CASE("not allowing forces not requiring") {
    Classification c = requires_nsmp(parse_pattern("0 +\n0 0"));
    CHECK(c.allow_verdict == AllowVerdict::DoesNotAllow);
    CHECK(c.require_verdict == RequireVerdict::DoesNotRequire);
    CHECK_FALSE(c.provenance.empty());
}

TEST_CASE("order-1 and order-2 table entries") {
    CHECK(requires_nsmp(parse_pattern("+")).require_verdict == RequireVerdict::Requires);
    CHECK(requires_nsmp(parse_pattern("0")).require_verdict == RequireVerdict::Requires);
    // Reducible order 2: distinct diagonal symbols require, equal nonzero do not.
    CHECK(requires_nsmp(parse_pattern("+ 0\n- -")).require_verdict == RequireVerdict::Requires);
    CHECK(requires_nsmp(parse_pattern("+ +\n0 0")).require_verdict == RequireVerdict::Requires);
    Classification eq = requires_nsmp(parse_pattern("+ 0\n- +"));
    CHECK(eq.require_verdict == RequireVerdict::DoesNotRequire);
    REQUIRE(eq.refutation.has_value());
    CHECK(verify_witness(eq.refutation->realization, eq.refutation->witness, Property::Nsmp));
    CHECK(qualitative_member(eq.refutation->realization, parse_pattern("+ 0\n- +")));
    // Irreducible order 2 always requires.
    CHECK(requires_nsmp(parse_pattern("+ +\n- -")).require_verdict == RequireVerdict::Requires);
}

TEST_CASE("structural rules settle the fixture patterns") {
    CHECK(requires_nsmp(fixtures::repeated_eigenvalue_pattern()).require_verdict ==
          RequireVerdict::Requires);
    CHECK(requires_nsmp(fixtures::hessenberg_six_one()).require_verdict ==
          RequireVerdict::Requires);
    CHECK(requires_nsmp(fixtures::hessenberg_six_two()).require_verdict ==
          RequireVerdict::Requires);
    CHECK(requires_nsmp(fixtures::star_pair_pattern()).require_verdict ==
          RequireVerdict::DoesNotRequire);
    CHECK(requires_nsmp(fixtures::star_triple_pattern()).require_verdict ==
          RequireVerdict::DoesNotRequire);
    CHECK(requires_nsmp(fixtures::spectrally_arbitrary_pattern()).require_verdict ==
          RequireVerdict::DoesNotRequire);
    CHECK(requires_nsmp(fixtures::bipartite_pattern_one()).require_verdict ==
          RequireVerdict::DoesNotRequire);
}

TEST_CASE("cycle patterns with loops require the property") {
    SignPattern p(5);
    for (std::size_t i = 0; i < 5; ++i) p.at(i, (i + 1) % 5) = i % 2 ? Sign::Minus : Sign::Plus;
    p.at(0, 0) = Sign::Plus;
    p.at(3, 3) = Sign::Minus;
    Classification c = requires_nsmp(p);
    CHECK(c.require_verdict == RequireVerdict::Requires);
}

TEST_CASE("large stars never require the property") {
    SignPattern star(8);
    for (std::size_t v = 1; v < 8; ++v) {
        star.at(0, v) = Sign::Plus;
        star.at(v, 0) = Sign::Plus;
        star.at(v, v) = v % 2 ? Sign::Plus : Sign::Minus;
    }
    CHECK(requires_nsmp(star).require_verdict == RequireVerdict::DoesNotRequire);
}

TEST_CASE("requiring implies allowing on random order-3 patterns") {
    TestRng rng(61);
    for (int t = 0; t < 60; ++t) {
        SignPattern p = random_pattern(3, rng, 50);
        Classification c = requires_nsmp(p);
        CHECK(c.require_verdict != RequireVerdict::Unknown);
        if (c.require_verdict == RequireVerdict::Requires)
            CHECK(c.allow_verdict == AllowVerdict::Allows);
        if (c.allow_verdict == AllowVerdict::DoesNotAllow)
            CHECK(c.require_verdict == RequireVerdict::DoesNotRequire);
        if (c.refutation) {
            CHECK(qualitative_member(c.refutation->realization, p));
            CHECK(verify_witness(c.refutation->realization, c.refutation->witness,
                                 Property::Nsmp));
        }
    }
}

TEST_CASE("verdicts are equivalence invariants") {
    TestRng rng(67);
    for (int t = 0; t < 30; ++t) {
        SignPattern p = random_pattern(3, rng, 50);
        PatternTransform tr = PatternTransform::identity(3);
        std::swap(tr.permutation[0], tr.permutation[2]);
        tr.signature[1] = -1;
        tr.transposed = (t % 2) == 0;
        tr.negated = (t % 3) == 0;
        SignPattern q = apply_transform(p, tr);
        Classification cp = requires_nsmp(p);
        Classification cq = requires_nsmp(q);
        CHECK(cp.allow_verdict == cq.allow_verdict);
        CHECK(cp.require_verdict == cq.require_verdict);
    }
}

TEST_CASE("distinct-spectrum realizations are found exactly when allowed") {
    CHECK_FALSE(construct_distinct_realization(parse_pattern("0 +\n0 0"), 1, 100).has_value());
    auto r = construct_distinct_realization(parse_pattern("0 + 0\n0 0 +\n+ 0 0"), 1, 200);
    REQUIRE(r.has_value());
    CHECK(is_squarefree(char_poly(*r)));
    CHECK(check(*r, Property::Nsmp).has_property());
}

TEST_CASE("witness search certifies the order-3 refutable families") {
    for (const char* text : {"+ + 0\n+ + 0\n0 0 0",    // singular twin rows
                             "+ + 0\n- - 0\n0 0 0",    // opposite rows
                             "+ + 0\n- 0 0\n0 0 +",    // eigenvalue collision
                             "0 + 0\n+ 0 0\n0 0 +",    // 2-cycle vs positive loop
                             "+ 0 0\n0 0 0\n0 0 +",    // equal-sign 1x1 blocks
                             "0 - 0\n0 + 0\n0 0 +"}) { // triangular collision
        SignPattern p = parse_pattern(text);
        auto hit = witness_search(p, 500, 1);
        REQUIRE_MESSAGE(hit.has_value(), text);
        CHECK(qualitative_member(hit->realization, p));
        CHECK(verify_witness(hit->realization, hit->witness, Property::Nsmp));
    }
    CHECK_FALSE(witness_search(parse_pattern("+ +\n- -"), 60, 1).has_value());
}

TEST_CASE("template library matches its own fixed signings") {
    const auto& lib = TemplateLibrary::instance();
    REQUIRE(lib.requires_templates.size() == 6);
    REQUIRE(lib.allows_templates.size() == 6);
    CHECK(orbit_matches_template(parse_pattern("+ + 0\n+ - 0\n0 0 0"),
                                 lib.requires_templates[1]));
    CHECK(orbit_matches_template(parse_pattern("+ + 0\n+ + 0\n0 0 0"),
                                 lib.allows_templates[0]));
    // An image under the group still matches.
    SignPattern image = apply_transform(parse_pattern("+ + 0\n+ + 0\n0 0 0"),
                                        PatternTransform{{2, 0, 1}, {1, -1, 1}, true, false});
    CHECK(orbit_matches_template(image, lib.allows_templates[0]));
    CHECK_FALSE(orbit_matches_template(parse_pattern("0 + 0\n0 0 +\n+ 0 0"),
                                       lib.allows_templates[0]));
}

TEST_CASE("full and orbit enumeration agree at order 2") {
    ClassificationSummary full = classify_all(2);
    CHECK(full.total_patterns == 81);
    std::map<std::pair<AllowVerdict, RequireVerdict>, std::size_t> expected{
        {{AllowVerdict::Allows, RequireVerdict::Requires}, 66},
        {{AllowVerdict::Allows, RequireVerdict::DoesNotRequire}, 10},
        {{AllowVerdict::DoesNotAllow, RequireVerdict::DoesNotRequire}, 5}};
    CHECK(full.verdict_counts == expected);

    ClassificationSummary orbits = classify_all(2, {}, true);
    CHECK(orbits.total_patterns == 81);
    CHECK(orbits.verdict_counts == expected);
    std::size_t weighted = 0;
    for (const auto& row : orbits.rows) {
        weighted += row.orbit_size;
        CHECK(row.pattern == row.canonical);
    }
    CHECK(weighted == 81);
}

TEST_CASE("order-1 enumeration is all-requires") {
    ClassificationSummary s = classify_all(1);
    CHECK(s.total_patterns == 3);
    CHECK(s.verdict_counts.size() == 1);
    CHECK(s.verdict_counts.at({AllowVerdict::Allows, RequireVerdict::Requires}) == 3);
    CHECK_THROWS_AS(classify_all(4), TooLarge);
}

TEST_CASE("figure constructions match their fixtures and hypotheses") {
    SignPattern left = build_figure_construction(FigureKind::Fig1Left);
    SignPattern right = build_figure_construction(FigureKind::Fig1Right);
    CHECK(left == fixtures::bipartite_pattern_one());
    CHECK(right == fixtures::bipartite_pattern_two());
    CHECK(build_figure_construction(FigureKind::Fig2) == fixtures::bipartite_odd_pattern());
    CHECK(build_figure_construction(FigureKind::Cnk, std::nullopt, 5) ==
          fixtures::spectrally_arbitrary_pattern());
    CHECK_THROWS_AS(build_figure_construction(FigureKind::Cnk, std::nullopt, 7),
                    HypothesisViolated);

    // Attachments demand a long composite cycle in the host away from vertex 1.
    SignPattern host = parse_pattern("0 + 0\n0 0 +\n+ 0 0");
    CHECK_THROWS_AS(build_figure_construction(FigureKind::Star2Attach, host),
                    HypothesisViolated);
    host.at(1, 1) = Sign::Plus;
    host.at(2, 2) = Sign::Plus;
    SignPattern attached = build_figure_construction(FigureKind::Star2Attach, host);
    CHECK(attached.size() == 5);
    CHECK(requires_nsmp(attached).require_verdict == RequireVerdict::DoesNotRequire);
    SignPattern attached3 = build_figure_construction(FigureKind::Star3Attach, host);
    CHECK(attached3.size() == 6);
    CHECK(requires_nsmp(attached3).require_verdict == RequireVerdict::DoesNotRequire);
}
