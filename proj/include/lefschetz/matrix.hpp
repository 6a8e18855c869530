/*
   Copyright 2026 The lefschetz library developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEFSCHETZ_MATRIX_HPP
#define LEFSCHETZ_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/fields.hpp"
#include "lefschetz/integers.hpp"

namespace lefschetz {

/// Dense matrix with exact entries over a field F. Immutable in spirit:
/// rank computations work on copies.
template <class F>
class DenseMatrix {
public:
    using Element = typename F::Element;

    DenseMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          data_(rows * cols, field_.zero()) {}

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Element& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    Element& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }

    /// Builds a matrix from column vectors (each of length `rows`).
    static DenseMatrix from_columns(F field, std::size_t rows,
                                    const std::vector<std::vector<Element>>& cols) {
        DenseMatrix m(std::move(field), rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw DimensionMismatch("column length does not match row count");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    /// Horizontal concatenation [this | other]; row counts must agree.
    DenseMatrix concat(const DenseMatrix& other) const {
        if (rows_ != other.rows_)
            throw DimensionMismatch("row counts differ in concatenation");
        if (!(field_ == other.field_))
            throw DimensionMismatch("fields differ in concatenation");
        DenseMatrix m(field_, rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j)
                m(i, cols_ + j) = other(i, j);
        }
        return m;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

namespace detail {

/// Fraction-free (one-step Bareiss) elimination over the integers. Pivots
/// are the first nonzero entry in column order, so runs are reproducible.
/// Entries stay minors of the input, which keeps growth polynomial.
inline long long integer_rank(std::vector<std::vector<Int>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    long long rank = 0;
    std::size_t pivot_row = 0;
    Int prev_pivot = 1;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t k = pivot_row;
        while (k < rows && a[k][c] == 0) ++k;
        if (k == rows) continue;
        if (k != pivot_row) std::swap(a[k], a[pivot_row]);
        const Int pivot = a[pivot_row][c];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * pivot - a[i][c] * a[pivot_row][j]) / prev_pivot;
            }
            a[i][c] = 0;
        }
        prev_pivot = pivot;
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Exact rank over the rationals. Each row is scaled to integers first and
/// the elimination itself is fraction-free.
inline long long rank(const DenseMatrix<RationalField>& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int den = denominator(m(i, j));
            scale = lcm(scale, den);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational v = m(i, j);
            a[i][j] = numerator(v) * (scale / denominator(v));
        }
    }
    return detail::integer_rank(std::move(a));
}

/// Exact rank over a prime field by Gaussian elimination mod p.
inline long long rank(const DenseMatrix<PrimeField>& m) {
    const PrimeField& f = m.field();
    std::vector<std::vector<long long>> a(m.rows(),
                                          std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    const std::size_t rows = m.rows(), cols = m.cols();
    long long rank_count = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t k = pivot_row;
        while (k < rows && a[k][c] == 0) ++k;
        if (k == rows) continue;
        if (k != pivot_row) std::swap(a[k], a[pivot_row]);
        const long long inv_pivot = f.inv(a[pivot_row][c]);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const long long factor = f.mul(a[i][c], inv_pivot);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[pivot_row][j]));
        }
        ++pivot_row;
        ++rank_count;
    }
    return rank_count;
}

/// Rank of the horizontal concatenation [A | B].
template <class F>
long long rank_of_stacked(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
    return rank(a.concat(b));
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_MATRIX_HPP
