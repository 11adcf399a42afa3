#ifndef NSMP_POLYNOMIAL_HPP
#define NSMP_POLYNOMIAL_HPP

#include "nsmp/matrix.hpp"
#include "nsmp/rational.hpp"

#include <string>
#include <vector>

namespace nsmp {

struct BothZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const = default;

    Polynomial monic() const;
    Polynomial derivative() const;
    /// Remainder of *this divided by divisor (divisor nonzero).
    Polynomial remainder(const Polynomial& divisor) const;

    Rational eval(const Rational& x) const;
    /// Horner evaluation at a square matrix.
    RationalMatrix eval(const RationalMatrix& a) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic characteristic polynomial det(xI - A), by Faddeev-LeVerrier.
Polynomial char_poly(const RationalMatrix& a);

/// Monic gcd over Q. Throws BothZero when both arguments are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// True iff gcd(p, p') is constant, i.e. p has no repeated complex root.
bool is_squarefree(const Polynomial& p);

/// All rational roots of p (p nonzero), each listed once, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace nsmp

#endif
