#include "twistkit/complex.hpp"

namespace twistkit {

Complex::Complex(Field f, int lo, std::vector<int> dims, std::vector<Matrix> diffs)
    : field_(f), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (!dims_.empty() && diffs_.size() + 1 != dims_.size())
        throw Error("shape-error", "complex needs one differential per adjacent degree pair");
    for (int d : dims_)
        if (d < 0) throw Error("shape-error", "negative dimension");
    normalize();
    validate();
}

Complex Complex::point(Field f, int degree, int dim) {
    return Complex(f, degree, {dim}, {});
}

void Complex::normalize() {
    while (!dims_.empty() && dims_.front() == 0) {
        dims_.erase(dims_.begin());
        if (!diffs_.empty()) diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!dims_.empty() && dims_.back() == 0) {
        dims_.pop_back();
        if (!diffs_.empty()) diffs_.pop_back();
    }
    if (dims_.empty()) {
        lo_ = 0;
        diffs_.clear();
    }
}

int Complex::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

int Complex::dim(int n) const {
    int i = n - lo_;
    if (i < 0 || i >= int(dims_.size())) return 0;
    return dims_[i];
}

Matrix Complex::diff(int n) const {
    int i = n - lo_;
    if (i < 0 || i >= int(diffs_.size())) return Matrix::zero(dim(n + 1), dim(n), field_);
    return diffs_[i];
}

bool Complex::operator==(const Complex& o) const {
    return field_ == o.field_ && lo_ == o.lo_ && dims_ == o.dims_ && diffs_ == o.diffs_;
}

void Complex::validate() const {
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
            throw Error("shape-error", "differential shape mismatch at degree " +
                                           std::to_string(lo_ + int(i)));
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
        if (!(diffs_[i + 1] * diffs_[i]).is_zero())
            throw Error("invalid-input",
                        "d∘d ≠ 0 at degree " + std::to_string(lo_ + int(i)));
}

int SumLayout::offset(int part, int degree) const {
    int off = 0;
    for (int k = 0; k < part; ++k) off += parts[k].dim(degree);
    return off;
}

SumLayout direct_sum_layout(std::vector<Complex> parts) {
    if (parts.empty()) throw Error("invalid-input", "empty direct sum");
    Field f = parts.front().field();
    int lo = 0, hi = -1;
    bool any = false;
    for (const Complex& c : parts) {
        if (c.field() != f) throw Error("field-mismatch", "direct sum over mixed fields");
        if (c.is_zero_complex()) continue;
        if (!any) {
            lo = c.lo();
            hi = c.hi();
            any = true;
        } else {
            lo = std::min(lo, c.lo());
            hi = std::max(hi, c.hi());
        }
    }
    if (!any) return SumLayout{std::move(parts), Complex::zero(f)};
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        int d = 0;
        for (const Complex& c : parts) d += c.dim(n);
        dims.push_back(d);
    }
    for (int n = lo; n < hi; ++n) {
        int rows = dims[n + 1 - lo], cols = dims[n - lo];
        Matrix m(rows, cols, f);
        int roff = 0, coff = 0;
        for (const Complex& c : parts) {
            m.set_block(roff, coff, c.diff(n));
            roff += c.dim(n + 1);
            coff += c.dim(n);
        }
        diffs.push_back(std::move(m));
    }
    Complex total(f, lo, std::move(dims), std::move(diffs));
    return SumLayout{std::move(parts), std::move(total)};
}

Complex direct_sum(const std::vector<Complex>& parts) {
    return direct_sum_layout(parts).total;
}

Complex shift(const Complex& c, int p) {
    if (c.is_zero_complex()) return c;
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
    for (int n = c.lo(); n < c.hi(); ++n) diffs.push_back(c.diff(n));
    return Complex(c.field(), c.lo() - p, std::move(dims), std::move(diffs));
}

} // namespace twistkit
