#include "nsmp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace nsmp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) {
    return c == 0 ? Polynomial() : Polynomial({c});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = coeffs_;
    Rational inv = Rational(1) / leading();
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::remainder(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> r = coeffs_;
    const auto& d = divisor.coeffs_;
    while (r.size() >= d.size() && !r.empty()) {
        Rational f = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

RationalMatrix Polynomial::eval(const RationalMatrix& a) const {
    if (!a.square()) throw NonSquare("polynomial evaluation at non-square matrix");
    RationalMatrix v = RationalMatrix::zero(a.rows(), a.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        v = v * a;
        for (std::size_t i = 0; i < a.rows(); ++i) v.at(i, i) += *it;
    }
    return v;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0) continue;
        Rational c = coeffs_[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational ac = abs(c);
        if (k == 0 || ac != 1) os << format_rational(ac);
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Polynomial char_poly(const RationalMatrix& a) {
    if (!a.square()) throw NonSquare("characteristic polynomial of non-square matrix");
    std::size_t n = a.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Rational ck = -m.trace() / Rational(k);
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return Polynomial(std::move(c));
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero("gcd of two zero polynomials");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = a.remainder(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const Polynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("squarefree test needs degree >= 1");
    return poly_gcd(p, p.derivative()).is_constant();
}

namespace {

std::vector<Integer> positive_divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
    std::vector<Rational> roots;
    // Strip powers of x first.
    std::vector<Rational> c = p.coefficients();
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + low);
    if (c.size() <= 1) return roots;

    // Clear denominators to apply the rational root bound.
    Integer scale = 1;
    for (const auto& x : c) scale = lcm(scale, denominator(x));
    std::vector<Integer> ic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) ic[i] = numerator(c[i]) * (scale / denominator(c[i]));

    Polynomial stripped(std::move(c));
    for (const Integer& num : positive_divisors(ic.front()))
        for (const Integer& den : positive_divisors(ic.back()))
            for (int s : {1, -1}) {
                Rational cand(s * num, den);
                if (stripped.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace nsmp
