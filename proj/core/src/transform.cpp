#include "nsmp/transform.hpp"

#include <algorithm>
#include <numeric>

namespace nsmp {

PatternTransform PatternTransform::identity(std::size_t n) {
    PatternTransform t;
    t.permutation.resize(n);
    std::iota(t.permutation.begin(), t.permutation.end(), std::size_t{0});
    t.signature.assign(n, 1);
    return t;
}

PatternTransform PatternTransform::inverse() const {
    // With T and N central and perm(sig) = (sig o perm^-1)(perm), the inverse
    // in normal form is (perm^-1, sig o perm^-1, transposed, negated).
    PatternTransform inv;
    std::size_t n = permutation.size();
    inv.permutation.resize(n);
    inv.signature.resize(n);
    for (std::size_t i = 0; i < n; ++i) inv.permutation[permutation[i]] = i;
    for (std::size_t i = 0; i < n; ++i) inv.signature[i] = signature[inv.permutation[i]];
    inv.transposed = transposed;
    inv.negated = negated;
    return inv;
}

SignPattern apply_transform(const SignPattern& p, const PatternTransform& t) {
    std::size_t n = p.size();
    if (t.permutation.size() != n || t.signature.size() != n)
        throw DimensionMismatch("transform dimension differs from pattern");
    SignPattern q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Sign s = p.at(t.permutation[i], t.permutation[j]);
            if (t.signature[i] * t.signature[j] < 0) s = negate(s);
            q.at(i, j) = s;
        }
    if (t.transposed) q = q.transposed();
    if (t.negated) q = q.negated();
    return q;
}

std::pair<SignPattern, PatternTransform> canonical_form(const SignPattern& p) {
    std::size_t n = p.size();
    if (n > 6) throw TooLarge("canonical form limited to n <= 6");

    PatternTransform t = PatternTransform::identity(n);
    SignPattern best = p;
    PatternTransform best_t = t;
    bool first = true;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        t.permutation = perm;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (std::size_t i = 0; i < n; ++i) t.signature[i] = (mask >> i) & 1 ? -1 : 1;
            for (int d = 0; d < 2; ++d)
                for (int e = 0; e < 2; ++e) {
                    t.transposed = d;
                    t.negated = e;
                    SignPattern img = apply_transform(p, t);
                    if (first || img < best) {
                        best = img;
                        best_t = t;
                        first = false;
                    }
                }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return {best, best_t};
}

bool are_equivalent(const SignPattern& p, const SignPattern& r) {
    if (p.size() != r.size()) throw DimensionMismatch("pattern dimensions differ");
    return canonical_form(p).first == canonical_form(r).first;
}

}  // namespace nsmp
