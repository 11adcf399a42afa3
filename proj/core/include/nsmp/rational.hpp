#ifndef NSMP_RATIONAL_HPP
#define NSMP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nsmp {

// Exact scalars. All arithmetic in the library is over Q; nothing is rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::length_error {
    using std::length_error::length_error;
};

/// Parses "p/q" or "p". Throws ParseError on anything else (including q = 0).
Rational parse_rational(const std::string& token);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

inline int sign_of(const Rational& r) { return r.sign(); }

}  // namespace nsmp

#endif
