#pragma once

// Small dense matrices over an exact field, with just enough linear algebra
// for minimal polynomials, linear expressions and characteristic
// polynomials.

#include <optional>
#include <stdexcept>
#include <vector>

#include "azk/arith/poly.hpp"

namespace azk {

template <class Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set_column(std::size_t j, const std::vector<Scalar>& v)
    {
        if (v.size() != rows_)
            throw std::invalid_argument("Matrix::set_column: size mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Solve A x = b exactly; std::nullopt if inconsistent. Free variables of
/// an underdetermined consistent system are set to zero.
template <class Scalar>
std::optional<std::vector<Scalar>> solve(Matrix<Scalar> a, std::vector<Scalar> b)
{
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m)
        throw std::invalid_argument("solve: size mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && is_zero(a(piv, col)))
            ++piv;
        if (piv == m)
            continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(piv, j), a(row, j));
            std::swap(b[piv], b[row]);
        }
        const Scalar inv = inverse(a(row, col));
        for (std::size_t j = col; j < n; ++j)
            a(row, j) = a(row, j) * inv;
        b[row] = b[row] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || is_zero(a(i, col)))
                continue;
            const Scalar f = a(i, col);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) = a(i, j) - f * a(row, j);
            b[i] = b[i] - f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!is_zero(b[i]))
            return std::nullopt;
    std::vector<Scalar> x(n);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = b[k];
    return x;
}

/// Characteristic polynomial det(X I - A) via reduction to upper
/// Hessenberg form.
template <class Scalar>
Poly<Scalar> charpoly(Matrix<Scalar> h)
{
    const std::size_t n = h.rows();
    if (h.cols() != n)
        throw std::invalid_argument("charpoly: matrix not square");
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && is_zero(h(piv, m - 1)))
            ++piv;
        if (piv == n)
            continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(piv, j), h(m, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(h(i, piv), h(i, m));
        }
        const Scalar inv = inverse(h(m, m - 1));
        for (std::size_t i = m + 1; i < n; ++i) {
            if (is_zero(h(i, m - 1)))
                continue;
            const Scalar u = h(i, m - 1) * inv;
            for (std::size_t j = 0; j < n; ++j)
                h(i, j) = h(i, j) - u * h(m, j);
            for (std::size_t j = 0; j < n; ++j)
                h(j, m) = h(j, m) + u * h(j, i);
        }
    }
    // p_k = characteristic polynomial of the leading k x k block.
    const Scalar one = Scalar(1);
    std::vector<Poly<Scalar>> p(n + 1);
    p[0] = Poly<Scalar>::constant(one);
    const Poly<Scalar> x = Poly<Scalar>::monomial(one, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (x - Poly<Scalar>::constant(h(k - 1, k - 1))) * p[k - 1];
        Scalar t = one;
        for (std::size_t i = 1; i < k; ++i) {
            t = t * h(k - i, k - i - 1);
            const Scalar coeff = t * h(k - i - 1, k - 1);
            p[k] = p[k] - p[k - i - 1] * coeff;
        }
    }
    return p[n];
}

} // namespace azk
