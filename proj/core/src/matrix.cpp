#include "nsmp/matrix.hpp"

#include <sstream>
#include <utility>

namespace nsmp {

Rational parse_rational(const std::string& token) {
    // Accepted forms: [-]digits or [-]digits/digits with positive denominator.
    auto bad = [&] { return ParseError("bad rational token: '" + token + "'"); };
    if (token.empty()) throw bad();
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(token));
        }
        Integer num(token.substr(0, slash));
        Integer den(token.substr(slash + 1));
        if (den <= 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, cols);
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational RationalMatrix::trace() const {
    if (!square()) throw NonSquare("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("product dimension mismatch");
    RationalMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                p.at(i, j) += a * rhs.at(k, j);
            }
        }
    return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("sum dimension mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + rhs.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("difference dimension mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - rhs.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] * c;
    return s;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
    RationalMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

std::string RationalMatrix::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

RationalMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<Rational> row;
        std::string tok;
        while (toks >> tok) row.push_back(parse_rational(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    std::size_t cols = rows[0].size();
    std::vector<Rational> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) throw ParseError("ragged matrix rows");
        for (const auto& e : row) entries.push_back(e);
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix r = m;
    return rref(r).size();
}

Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw NonSquare("determinant of non-square matrix");
    RationalMatrix r = m;
    std::size_t n = r.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && r.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(r.at(pivot, j), r.at(col, j));
            det = -det;
        }
        det *= r.at(col, col);
        Rational inv = Rational(1) / r.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (r.at(i, col) == 0) continue;
            Rational f = r.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) r.at(i, j) -= f * r.at(col, j);
        }
    }
    return det;
}

std::vector<RationalMatrix> nullspace(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RationalMatrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalMatrix v(m.cols(), 1);
        v.at(free_col, 0) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            if (pivots[k] < free_col) v.at(pivots[k], 0) = -r.at(k, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> matrix_power_traces(const RationalMatrix& a, std::size_t kmax) {
    if (!a.square()) throw NonSquare("power traces of non-square matrix");
    std::vector<Rational> traces;
    traces.reserve(kmax + 1);
    traces.emplace_back(a.rows());
    RationalMatrix p = RationalMatrix::identity(a.rows());
    for (std::size_t k = 1; k <= kmax; ++k) {
        p = p * a;
        traces.push_back(p.trace());
    }
    return traces;
}

}  // namespace nsmp
