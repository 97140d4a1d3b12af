#include "twistkit/matrix.hpp"

namespace twistkit {

Matrix Matrix::identity(int n, Field f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("shape-error", "matrix addition shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("shape-error", "matrix subtraction shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("shape-error", "matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.data_) s = -s;
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& blk) {
    for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) at(r0 + i, c0 + j) = blk.at(i, j);
}

Matrix Matrix::block(int r0, int c0, int rows, int cols) const {
    Matrix r(rows, cols, field_);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

namespace {

struct Echelon {
    Matrix m;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column per pivot row
    int swaps = 0;
    Scalar pivot_product;
};

Echelon rref(const Matrix& in) {
    Echelon e{in, {}, 0, Scalar::one(in.field())};
    Matrix& m = e.m;
    int lead = 0;
    for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
        int piv = -1;
        for (int c = lead; c < m.cols() && piv < 0; ++c)
            for (int i = r; i < m.rows(); ++i)
                if (!m.at(i, c).is_zero()) {
                    piv = i;
                    lead = c;
                    break;
                }
        if (piv < 0) break;
        if (piv != r) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(r, c));
            ++e.swaps;
        }
        Scalar p = m.at(r, lead);
        e.pivot_product *= p;
        for (int c = lead; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) / p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead).is_zero()) continue;
            Scalar f = m.at(i, lead);
            for (int c = lead; c < m.cols(); ++c) m.at(i, c) -= f * m.at(r, c);
        }
        e.pivots.push_back(lead);
        ++lead;
    }
    return e;
}

} // namespace

int Matrix::rank() const { return int(rref(*this).pivots.size()); }

Matrix Matrix::kernel_basis() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols_, int(free_cols.size()), field_);
    for (int j = 0; j < int(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = Scalar::one(field_);
        for (int r = 0; r < int(e.pivots.size()); ++r) k.at(e.pivots[r], j) = -e.m.at(r, fc);
    }
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    if (rhs.rows() != rows_) throw Error("shape-error", "solve: rhs row mismatch");
    Matrix aug(rows_, cols_ + rhs.cols(), field_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, rhs);
    Echelon e = rref(aug);
    // Inconsistent if a pivot lands in the rhs block.
    for (int c : e.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(cols_, rhs.cols(), field_);
    for (int r = 0; r < int(e.pivots.size()); ++r)
        for (int j = 0; j < rhs.cols(); ++j) x.at(e.pivots[r], j) = e.m.at(r, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return solve(identity(rows_, field_));
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw Error("shape-error", "determinant of non-square matrix");
    Echelon e = rref(*this);
    if (int(e.pivots.size()) != rows_) return Scalar::zero(field_);
    Scalar d = e.pivot_product;
    if (e.swaps % 2) d = -d;
    return d;
}

int Matrix::nnz() const {
    int n = 0;
    for (const auto& s : data_)
        if (!s.is_zero()) ++n;
    return n;
}

} // namespace twistkit
