#include "curvess/linalg.hpp"

#include "curvess/error.hpp"

namespace curvess {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error(ErrorKind::InvalidArgument, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const
{
    for (const Rational& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots)
{
    std::size_t row = 0;
    if (pivots)
        pivots->clear();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(row, j);
        }
        if (pivots)
            pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const Matrix& m)
{
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<Vector> nullspace(const Matrix& m)
{
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector x(m.cols());
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -r(i, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

Vector operator*(const Matrix& m, const Vector& x)
{
    if (x.size() != m.cols())
        throw Error(ErrorKind::InvalidArgument, "matrix-vector size mismatch");
    Vector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (x[j] != 0)
                y[i] += m(i, j) * x[j];
    return y;
}

} // namespace curvess
