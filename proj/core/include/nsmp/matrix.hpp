#ifndef NSMP_MATRIX_HPP
#define NSMP_MATRIX_HPP

#include "nsmp/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nsmp {

/// Dense matrix over Q, row-major. Immutable in spirit: operations return
/// new values, nothing rounds.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    RationalMatrix transpose() const;
    Rational trace() const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rational& c) const;
    bool operator==(const RationalMatrix& rhs) const = default;

    /// Principal submatrix on the given (sorted or not) index list.
    RationalMatrix submatrix(const std::vector<std::size_t>& row_idx,
                             const std::vector<std::size_t>& col_idx) const;

    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Parses whitespace-separated rational tokens, one row per line.
RationalMatrix parse_matrix(const std::string& text);

/// Rank of M by exact Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

/// Determinant by exact Gaussian elimination. Throws NonSquare.
Rational determinant(const RationalMatrix& m);

/// Basis of the right nullspace of M as column vectors (cols x 1 matrices).
/// Basis vectors are produced in the frozen order given by the free columns
/// of the reduced row echelon form, so results are deterministic.
std::vector<RationalMatrix> nullspace(const RationalMatrix& m);

/// [tr(A^0), tr(A^1), ..., tr(A^kmax)]. Throws NonSquare.
std::vector<Rational> matrix_power_traces(const RationalMatrix& a, std::size_t kmax);

}  // namespace nsmp

#endif
