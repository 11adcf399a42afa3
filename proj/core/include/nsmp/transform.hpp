#ifndef NSMP_TRANSFORM_HPP
#define NSMP_TRANSFORM_HPP

#include "nsmp/sign_pattern.hpp"

#include <vector>

namespace nsmp {

/// Element of the pattern equivalence group: permutation similarity, then
/// signature similarity, then optional transposition, then optional negation.
/// The composition order is frozen; every group element has a representative
/// in this normal form.
struct PatternTransform {
    std::vector<std::size_t> permutation;  // image position i takes entry perm[i]
    std::vector<int> signature;            // entries +1 / -1
    bool transposed = false;
    bool negated = false;

    static PatternTransform identity(std::size_t n);
    PatternTransform inverse() const;
};

/// Image of P under t. Throws DimensionMismatch when sizes differ.
SignPattern apply_transform(const SignPattern& p, const PatternTransform& t);

/// Lexicographically minimal pattern in the equivalence orbit of P
/// (row-major, Zero < Plus < Minus), with a transform mapping P to it.
/// Exhaustive over the n! * 2^n * 4 images; throws TooLarge for n > 6.
std::pair<SignPattern, PatternTransform> canonical_form(const SignPattern& p);

/// True iff the canonical forms coincide. Throws TooLarge for n > 6.
bool are_equivalent(const SignPattern& p, const SignPattern& r);

}  // namespace nsmp

#endif
