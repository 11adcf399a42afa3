#include "nsmp/sign_pattern.hpp"

#include "nsmp/rng.hpp"

#include <sstream>
#include <utility>

namespace nsmp {

char sign_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        default: return '0';
    }
}

Sign sign_of_rational(const Rational& r) {
    int s = r.sign();
    return s == 0 ? Sign::Zero : (s > 0 ? Sign::Plus : Sign::Minus);
}

SignPattern::SignPattern(std::size_t n, std::vector<Sign> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) throw DimensionMismatch("entry count does not match n*n");
}

SignPattern SignPattern::negated() const {
    SignPattern q(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) q.entries_[i] = negate(entries_[i]);
    return q;
}

SignPattern SignPattern::transposed() const {
    SignPattern q(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) q.at(j, i) = at(i, j);
    return q;
}

SignPattern SignPattern::subpattern(const std::vector<std::size_t>& idx) const {
    SignPattern q(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) q.at(i, j) = at(idx[i], idx[j]);
    return q;
}

std::size_t SignPattern::zero_count() const {
    std::size_t c = 0;
    for (auto s : entries_)
        if (s == Sign::Zero) ++c;
    return c;
}

std::string SignPattern::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << sign_char(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

SignPattern parse_pattern(const std::string& text) {
    std::vector<std::vector<Sign>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<Sign> row;
        std::string tok;
        while (toks >> tok) {
            if (tok == "+") row.push_back(Sign::Plus);
            else if (tok == "-") row.push_back(Sign::Minus);
            else if (tok == "0") row.push_back(Sign::Zero);
            else throw ParseError("bad sign token: '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty pattern");
    for (const auto& row : rows)
        if (row.size() != rows[0].size()) throw ParseError("ragged pattern rows");
    if (rows.size() != rows[0].size()) throw ParseError("pattern is not square");

    SignPattern p(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) p.at(i, j) = rows[i][j];
    return p;
}

SignPattern pattern_of(const RationalMatrix& a) {
    if (!a.square()) throw NonSquare("sign pattern of non-square matrix");
    SignPattern p(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p.at(i, j) = sign_of_rational(a.at(i, j));
    return p;
}

bool qualitative_member(const RationalMatrix& a, const SignPattern& p) {
    if (a.rows() != p.size() || a.cols() != p.size())
        throw DimensionMismatch("matrix and pattern dimensions differ");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (sign_of_rational(a.at(i, j)) != p.at(i, j)) return false;
    return true;
}

RationalMatrix sample_realization(const SignPattern& p, std::uint64_t seed,
                                  std::uint64_t magnitude_bound) {
    if (magnitude_bound < 1) throw std::invalid_argument("magnitude_bound must be >= 1");
    SplitMix64 rng(seed);
    std::size_t n = p.size();
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.at(i, j) == Sign::Zero) continue;
            Integer num = rng.uniform(magnitude_bound);
            Integer den = rng.uniform(magnitude_bound);
            Rational v(num, den);
            a.at(i, j) = p.at(i, j) == Sign::Plus ? v : -v;
        }
    return a;
}

RationalMatrix unit_realization(const SignPattern& p) {
    std::size_t n = p.size();
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.at(i, j) == Sign::Plus) a.at(i, j) = 1;
            else if (p.at(i, j) == Sign::Minus) a.at(i, j) = -1;
        }
    return a;
}

bool is_superpattern(const SignPattern& p, const SignPattern& r) {
    if (p.size() != r.size()) throw DimensionMismatch("pattern dimensions differ");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (r.at(i, j) != Sign::Zero && p.at(i, j) != r.at(i, j)) return false;
    return true;
}

}  // namespace nsmp
