#pragma once

#include "dquad/scalar.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace dquad {

/// Dense row-major matrix over a single coefficient domain.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Domain& domain);
    static Matrix identity(std::size_t n, const Domain& domain);
    /// All rows must have equal length and share one domain; `domain` is used when empty.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Domain& domain);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Domain& domain() const noexcept { return domain_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> column(std::size_t c) const;

    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    Matrix to_domain(const Domain& d) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    Domain domain_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination, pivoting on the first nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the right null space; the result is cols x (cols - rank).
Matrix kernel_basis(const Matrix& m);
/// Throws SingularMatrixError for a singular or non-square input.
Matrix invert(const Matrix& m);

/// Fraction-free Bareiss elimination over the integers; independent of `rref`.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace dquad
