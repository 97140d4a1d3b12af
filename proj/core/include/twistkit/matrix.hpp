#pragma once

#include "twistkit/scalar.hpp"

#include <optional>
#include <vector>

namespace twistkit {

/// Dense exact matrix over a Field.  Row-major; desk-scale dimensions.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Field f)
        : rows_(rows), cols_(cols), field_(f), data_(std::size_t(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(int n, Field f);
    static Matrix zero(int rows, int cols, Field f) { return Matrix(rows, cols, f); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }

    const Scalar& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;

    /// Writes `block` with its top-left corner at (r0, c0).
    void set_block(int r0, int c0, const Matrix& block);
    Matrix block(int r0, int c0, int rows, int cols) const;

    int rank() const;
    /// Columns form a basis of the kernel.
    Matrix kernel_basis() const;
    /// Particular solution of A x = b (b given column-wise), or nullopt.
    std::optional<Matrix> solve(const Matrix& rhs) const;
    std::optional<Matrix> inverse() const;
    bool invertible() const;
    Scalar determinant() const;

    /// Number of nonzero entries (used as the residual norm in reports).
    int nnz() const;

private:
    int rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

} // namespace twistkit
