#ifndef NSMP_SPATTERN_HPP
#define NSMP_SPATTERN_HPP

#include "nsmp/sign_pattern.hpp"

#include <string>
#include <vector>

namespace nsmp {

/// Relaxed pattern symbol. Each denotes a nonempty subset of {+,-,0}:
/// Star = {+,-}, NonNeg = {0,+}, NonPos = {0,-}, Any = {0,+,-}.
enum class SSymbol : std::uint8_t { Zero, Plus, Minus, Star, NonNeg, NonPos, Any };

/// True iff the sign lies in the subset denoted by the symbol.
bool symbol_admits(SSymbol sym, Sign s);

/// True iff every sign admitted by a is admitted by b.
bool symbol_relaxes(SSymbol b, SSymbol a);

std::string symbol_token(SSymbol sym);

/// Square grid over the relaxed symbol alphabet.
class SPattern {
public:
    SPattern() = default;
    explicit SPattern(std::size_t n) : n_(n), entries_(n * n, SSymbol::Zero) {}

    std::size_t size() const { return n_; }
    SSymbol at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    SSymbol& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    std::string to_text() const;

private:
    std::size_t n_ = 0;
    std::vector<SSymbol> entries_;
};

/// Grid of tokens from {+, -, 0, *, 0+, 0-, 0*}.
SPattern parse_spattern(const std::string& text);

/// True iff P is a fixed signing of T: every entry of P lies in the subset
/// denoted by the corresponding symbol of T.
bool matches_spattern(const SignPattern& p, const SPattern& t);

}  // namespace nsmp

#endif
