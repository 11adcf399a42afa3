#include "nsmp/fixtures.hpp"

#include "nsmp/engine.hpp"
#include "nsmp/polynomial.hpp"

namespace nsmp::fixtures {

RationalMatrix intro_a() { return parse_matrix("1 0\n-3 2"); }
RationalMatrix intro_b() { return parse_matrix("1 0\n-3 1"); }
RationalMatrix intro_witness() { return parse_matrix("0 4\n0 0"); }

SignPattern star_pair_pattern() { return parse_pattern("0 + +\n- 0 0\n+ 0 0"); }
RationalMatrix star_pair_matrix() { return parse_matrix("0 1 1\n-1 0 0\n1 0 0"); }
RationalMatrix star_pair_witness() { return parse_matrix("0 0 0\n0 -1 1\n0 -1 1"); }

SignPattern star_triple_pattern() { return parse_pattern("0 + + +\n+ + 0 0\n+ 0 + 0\n+ 0 0 +"); }
RationalMatrix star_triple_matrix() {
    return parse_matrix("0 1 1 1\n2 1 0 0\n3 0 1 0\n5 0 0 1");
}
RationalMatrix star_triple_witness() {
    return parse_matrix("0 0 0 0\n0 0 15 -15\n0 -10 0 10\n0 6 -6 0");
}

SignPattern repeated_eigenvalue_pattern() { return parse_pattern("0 + 0\n+ 0 +\n+ 0 0"); }
RationalMatrix repeated_eigenvalue_matrix() { return parse_matrix("0 1 0\n3 0 1\n2 0 0"); }

SignPattern bipartite_pattern_one() { return parse_pattern("0 + 0 0\n+ 0 - 0\n0 0 0 +\n+ 0 0 0"); }
RationalMatrix bipartite_matrix_one() {
    return parse_matrix("0 1 0 0\n2 0 -1 0\n0 0 0 1\n1 0 0 0");
}
RationalMatrix bipartite_witness_one() {
    return parse_matrix("1 0 1 0\n0 1 0 1\n-1 0 -1 0\n0 -1 0 -1");
}

SignPattern bipartite_pattern_two() { return parse_pattern("0 + 0 0\n+ 0 - 0\n0 + 0 +\n+ 0 0 0"); }
RationalMatrix bipartite_matrix_two() {
    return parse_matrix("0 1 0 0\n3 0 -1 0\n0 1 0 1\n1 0 0 0");
}
RationalMatrix bipartite_witness_two() {
    return parse_matrix("-2 0 -4 0\n0 -1 0 -1\n1 0 2 0\n0 1 0 1");
}

SignPattern bipartite_odd_pattern() {
    return parse_pattern("0 + 0 0 -\n0 0 + 0 0\n0 0 0 + 0\n+ 0 0 0 0\n+ 0 0 0 0");
}

SignPattern spectrally_arbitrary_pattern() {
    return parse_pattern("+ + 0 0 0\n0 0 + + +\n- - 0 0 0\n0 0 - 0 0\n0 0 0 - -");
}

RationalMatrix spectrally_arbitrary_matrix(const Rational& b) {
    RationalMatrix a =
        parse_matrix("1 1 0 0 0\n0 0 1 1 1\n-1 -1 0 0 0\n0 0 -1 0 0\n0 0 0 -1 -1");
    a.at(4, 4) = -b;
    return a;
}

RationalMatrix spectrally_arbitrary_witness() {
    return parse_matrix(
        "0 0 0 -1 1\n0 0 0 0 0\n0 0 0 -1 1\n0 0 0 0 0\n0 0 0 0 0");
}

SignPattern positive_eigenvalue_block() { return parse_pattern("+ - +\n+ 0 -\n+ + 0"); }

SignPattern hessenberg_six_one() {
    return parse_pattern(
        "0 + 0 0 0 0\n+ 0 + 0 0 0\n+ 0 0 + 0 0\n+ 0 0 0 + 0\n+ 0 0 0 0 +\n+ 0 0 0 0 0");
}

SignPattern hessenberg_six_two() {
    return parse_pattern(
        "0 + 0 0 0 0\n0 0 + 0 0 0\n0 - 0 + 0 0\n+ 0 0 0 + 0\n0 0 - 0 0 +\n+ - 0 0 0 0");
}

namespace {

bool has(const RationalMatrix& a, Property prop) { return check(a, prop).has_property(); }

bool certifies(const RationalMatrix& a, const RationalMatrix& x) {
    return !check(a, Property::Nsmp).has_property() && verify_witness(a, x, Property::Nsmp);
}

}  // namespace

std::vector<FixtureCheck> fixture_checks() {
    return {
        {"intro-a-has-both-properties",
         [] { return has(intro_a(), Property::Nsmp) && has(intro_a(), Property::Nssp); }},
        {"intro-b-refuted",
         [] { return certifies(intro_b(), intro_witness()); }},
        {"star-pair-refuted",
         [] {
             return qualitative_member(star_pair_matrix(), star_pair_pattern()) &&
                    certifies(star_pair_matrix(), star_pair_witness());
         }},
        {"star-triple-refuted",
         [] {
             return qualitative_member(star_triple_matrix(), star_triple_pattern()) &&
                    certifies(star_triple_matrix(), star_triple_witness());
         }},
        {"repeated-eigenvalue-yet-requires",
         [] {
             RationalMatrix a = repeated_eigenvalue_matrix();
             Polynomial expect = char_poly(a);
             // (x + 1)^2 (x - 2) = x^3 - 3x - 2, repeated root -1
             Polynomial target(std::vector<Rational>{-2, -3, 0, 1});
             Classification c = requires_nsmp(repeated_eigenvalue_pattern());
             return expect == target && !is_squarefree(expect) &&
                    c.require_verdict == RequireVerdict::Requires && has(a, Property::Nsmp);
         }},
        {"bipartite-one-refuted",
         [] {
             return qualitative_member(bipartite_matrix_one(), bipartite_pattern_one()) &&
                    certifies(bipartite_matrix_one(), bipartite_witness_one());
         }},
        {"bipartite-two-refuted",
         [] {
             return qualitative_member(bipartite_matrix_two(), bipartite_pattern_two()) &&
                    certifies(bipartite_matrix_two(), bipartite_witness_two());
         }},
        {"spectrally-arbitrary-split",
         [] {
             return has(spectrally_arbitrary_matrix(2), Property::Nsmp) &&
                    certifies(spectrally_arbitrary_matrix(1), spectrally_arbitrary_witness());
         }},
        {"positive-eigenvalue-block-direct-sum",
         [] {
             SignPattern s = positive_eigenvalue_block();
             if (requires_nsmp(s).require_verdict != RequireVerdict::Requires) return false;
             SignPattern sum(4);
             for (std::size_t i = 0; i < 3; ++i)
                 for (std::size_t j = 0; j < 3; ++j) sum.at(i, j) = s.at(i, j);
             sum.at(3, 3) = Sign::Plus;
             Classification c = requires_nsmp(sum);
             return c.allow_verdict == AllowVerdict::Allows &&
                    c.require_verdict == RequireVerdict::DoesNotRequire;
         }},
        {"hessenberg-six-require",
         [] {
             return requires_nsmp(hessenberg_six_one()).require_verdict ==
                        RequireVerdict::Requires &&
                    requires_nsmp(hessenberg_six_two()).require_verdict ==
                        RequireVerdict::Requires;
         }},
        {"figure-constructions-refuted",
         [] {
             for (FigureKind kind :
                  {FigureKind::Fig1Left, FigureKind::Fig1Right, FigureKind::Fig2}) {
                 Classification c = requires_nsmp(build_figure_construction(kind));
                 if (c.allow_verdict != AllowVerdict::Allows ||
                     c.require_verdict != RequireVerdict::DoesNotRequire)
                     return false;
             }
             Classification c =
                 requires_nsmp(build_figure_construction(FigureKind::Cnk, std::nullopt, 5));
             return c.require_verdict == RequireVerdict::DoesNotRequire;
         }},
    };
}

}  // namespace nsmp::fixtures
