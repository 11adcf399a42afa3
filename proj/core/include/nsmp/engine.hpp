#ifndef NSMP_ENGINE_HPP
#define NSMP_ENGINE_HPP

#include "nsmp/digraph.hpp"
#include "nsmp/matrix.hpp"
#include "nsmp/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nsmp {

/// Which strong property is being decided. Nsmp adds the n power-trace
/// equations to the Hadamard and commutator conditions; Nssp drops them.
enum class Property { Nsmp, Nssp };

std::string property_name(Property p);

/// The linear system whose solutions are the matrices X with A o X = O,
/// A X^T - X^T A = O and (for the multiplicity property) tr(X^T A^k) = 0
/// for 0 <= k < n. Variables are the entries of X at the zero positions of
/// A, in row-major order; everything else is forced to zero by the Hadamard
/// condition.
struct NsmpSystem {
    std::vector<std::pair<std::size_t, std::size_t>> free_positions;
    RationalMatrix constraint_matrix;  // one row per scalar equation
};

NsmpSystem assemble_system(const RationalMatrix& a, Property property);

enum class Outcome { HasProperty, LacksProperty };

struct NsmpVerdict {
    Property property = Property::Nsmp;
    Outcome outcome = Outcome::HasProperty;
    std::size_t nullity = 0;
    std::optional<RationalMatrix> witness;  // nonzero X, present iff nullity >= 1

    bool has_property() const { return outcome == Outcome::HasProperty; }
};

/// Decides the property exactly. The witness, when present, is the first
/// nullspace basis vector under the frozen elimination order, reshaped.
NsmpVerdict check(const RationalMatrix& a, Property property);

/// True iff X != O, A o X = O, A X^T - X^T A = O and (for Nsmp)
/// tr(X^T A^k) = 0 for 0 <= k < n, all exact.
bool verify_witness(const RationalMatrix& a, const RationalMatrix& x, Property property);

/// Verdict through the irreducible-block route: the matrix has the property
/// iff every diagonal block has it and the block characteristic polynomials
/// are pairwise coprime. Outcome only; no full-size witness is built.
struct BlockVerdict {
    std::vector<NsmpVerdict> block_verdicts;
    bool spectra_disjoint = true;
    NsmpVerdict combined;
};

BlockVerdict check_via_blocks(const RationalMatrix& a);

struct PatternMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Witness for a star-shaped realization, from the two pendant-gadget
/// templates: a pair of loopless non-centre vertices with oppositely signed
/// 2-cycles, or three non-centre vertices with equal loop sign (zero
/// included). The template is built in the scaling where the centre row is
/// all ones and pulled back through the explicit diagonal similarity; the
/// result is returned only when it verifies, which the all-unit realization
/// of the pattern always achieves.
std::optional<RationalMatrix> star_witness(const StarStructure& ss, const RationalMatrix& a);

}  // namespace nsmp

#endif
