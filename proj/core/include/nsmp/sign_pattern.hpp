#ifndef NSMP_SIGN_PATTERN_HPP
#define NSMP_SIGN_PATTERN_HPP

#include "nsmp/matrix.hpp"
#include "nsmp/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nsmp {

/// Entry of a sign pattern. The enumeration order Zero < Plus < Minus is
/// frozen: canonical forms break ties with it, so changing it would change
/// every canonical representative.
enum class Sign : std::uint8_t { Zero = 0, Plus = 1, Minus = 2 };

char sign_char(Sign s);
Sign sign_of_rational(const Rational& r);
inline Sign negate(Sign s) {
    return s == Sign::Zero ? s : (s == Sign::Plus ? Sign::Minus : Sign::Plus);
}

/// Square grid over {+,-,0}.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::size_t n) : n_(n), entries_(n * n, Sign::Zero) {}
    SignPattern(std::size_t n, std::vector<Sign> entries);

    std::size_t size() const { return n_; }
    Sign at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Sign& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool operator==(const SignPattern& rhs) const = default;
    /// Row-major lexicographic order under Zero < Plus < Minus.
    bool operator<(const SignPattern& rhs) const { return entries_ < rhs.entries_; }

    SignPattern negated() const;
    SignPattern transposed() const;
    /// Principal subpattern on the given vertex list.
    SignPattern subpattern(const std::vector<std::size_t>& idx) const;

    std::size_t zero_count() const;
    std::string to_text() const;

private:
    std::size_t n_ = 0;
    std::vector<Sign> entries_;
};

/// Rows of tokens from {+,-,0}. Throws ParseError on ragged rows, bad tokens,
/// or a non-square grid.
SignPattern parse_pattern(const std::string& text);

/// Sign pattern of a square rational matrix.
SignPattern pattern_of(const RationalMatrix& a);

/// True iff sign(A_ij) matches P_ij entrywise.
bool qualitative_member(const RationalMatrix& a, const SignPattern& p);

/// Deterministic realization of P: each nonzero entry is s*p/q with p,q
/// drawn uniformly from [1, magnitude_bound].
RationalMatrix sample_realization(const SignPattern& p, std::uint64_t seed,
                                  std::uint64_t magnitude_bound);

/// The all-unit realization: every nonzero entry is +1 or -1 per its sign.
RationalMatrix unit_realization(const SignPattern& p);

/// True iff P agrees with R on every nonzero entry of R.
bool is_superpattern(const SignPattern& p, const SignPattern& r);

}  // namespace nsmp

#endif
