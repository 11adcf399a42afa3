#ifndef NSMP_FIXTURES_HPP
#define NSMP_FIXTURES_HPP

#include "nsmp/classifier.hpp"
#include "nsmp/matrix.hpp"
#include "nsmp/sign_pattern.hpp"

#include <string>
#include <vector>

namespace nsmp::fixtures {

/// Introductory order-2 pair: intro_a has both strong properties, intro_b
/// has neither the multiplicity property (intro_witness certifies it).
RationalMatrix intro_a();
RationalMatrix intro_b();
RationalMatrix intro_witness();

/// Order-3 star with two loopless vertices on oppositely signed 2-cycles,
/// with a realization and the explicit rank-structured witness.
SignPattern star_pair_pattern();
RationalMatrix star_pair_matrix();
RationalMatrix star_pair_witness();

/// Order-4 star with three equal positive loops; 2-cycle return arcs carry
/// the values 2, 3, 5 so the witness entries are the pairwise products.
SignPattern star_triple_pattern();
RationalMatrix star_triple_matrix();
RationalMatrix star_triple_witness();

/// Hessenberg-shaped order-3 pattern that requires the property yet has a
/// realization with the repeated eigenvalue -1.
SignPattern repeated_eigenvalue_pattern();
RationalMatrix repeated_eigenvalue_matrix();

/// The two order-4 bipartite digraph patterns with printed refutations.
SignPattern bipartite_pattern_one();
RationalMatrix bipartite_matrix_one();
RationalMatrix bipartite_witness_one();
SignPattern bipartite_pattern_two();
RationalMatrix bipartite_matrix_two();
RationalMatrix bipartite_witness_two();

/// Odd-order bipartite construction: 4-cycle plus a pendant 2-cycle.
SignPattern bipartite_odd_pattern();

/// Order-5 spectrally arbitrary pattern; the realization has the property
/// for b = 2 but not for b = 1, where the printed witness applies.
SignPattern spectrally_arbitrary_pattern();
RationalMatrix spectrally_arbitrary_matrix(const Rational& b);
RationalMatrix spectrally_arbitrary_witness();

/// Hollow order-3 block that requires a positive eigenvalue; direct-summed
/// with [+] it allows but does not require the property.
SignPattern positive_eigenvalue_block();

/// The two order-6 proper Hessenberg patterns with one nonzero entry on
/// each subdiagonal.
SignPattern hessenberg_six_one();
SignPattern hessenberg_six_two();

/// Named replay checks over every fixture above; each returns true when the
/// transcribed claim holds under the engine.
struct FixtureCheck {
    std::string name;
    bool (*run)();
};

std::vector<FixtureCheck> fixture_checks();

}  // namespace nsmp::fixtures

#endif
