#pragma once

#include <vector>

#include "flatlab/scalar.hpp"

namespace flatlab {

/// Dense row-major matrix of exact field elements, just big enough for the
/// rank computations the oracles need.
class DenseMatrix {
public:
    DenseMatrix(size_t rows, size_t cols, FieldSpec field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    FieldSpec field() const { return field_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

/// Rank over the exact field. Rationals go through fraction-free (Bareiss)
/// elimination on a denominator-cleared integer matrix; prime fields use
/// plain Gaussian elimination. Destroys its argument.
size_t matrix_rank(DenseMatrix m);

} // namespace flatlab
