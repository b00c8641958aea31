#pragma once

#include "curvess/rational.hpp"

#include <cstddef>
#include <vector>

namespace curvess {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q. Small sizes only (local algebras, tail maps).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose j-th column is columns[j]; every column has length `rows`.
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    bool is_zero() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of {x : m·x = 0}, one vector per free column, with 1 in that column.
/// For the zero matrix this is the standard basis in column order.
std::vector<Vector> nullspace(const Matrix& m);

Vector operator*(const Matrix& m, const Vector& x);

} // namespace curvess
