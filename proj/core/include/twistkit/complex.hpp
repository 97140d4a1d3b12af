#pragma once

#include "twistkit/matrix.hpp"

#include <vector>

namespace twistkit {

/// Bounded cochain complex of finite-dimensional free modules over an exact
/// field: dimensions per degree and a degree-raising differential with
/// d_{n+1} ∘ d_n = 0.  Support is trimmed so equal complexes compare equal.
class Complex {
public:
    Complex() = default;
    explicit Complex(Field f) : field_(f) {}
    /// dims[i] is the dimension in degree lo+i; diffs[i] maps degree lo+i to
    /// lo+i+1 and must be sized dims[i+1] x dims[i].
    Complex(Field f, int lo, std::vector<int> dims, std::vector<Matrix> diffs);

    static Complex zero(Field f) { return Complex(f); }
    /// The field itself placed in a single degree.
    static Complex point(Field f, int degree, int dim = 1);

    Field field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + int(dims_.size()) - 1; } // lo-1 when empty
    bool is_zero_complex() const { return dims_.empty(); }
    int total_dim() const;
    /// Amplitude hi-lo of the support (-1 for the zero complex).
    int amplitude() const { return int(dims_.size()) - 1; }

    int dim(int n) const;
    /// Differential out of degree n (zero matrix of the right shape when the
    /// complex has no stored block there).
    Matrix diff(int n) const;

    bool operator==(const Complex& o) const;
    bool operator!=(const Complex& o) const { return !(*this == o); }

    /// Throws on shape errors or d∘d ≠ 0.
    void validate() const;

private:
    void normalize();

    Field field_;
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<Matrix> diffs_;
};

/// Offsets of each summand inside a direct sum, per degree.
struct SumLayout {
    std::vector<Complex> parts;
    Complex total;

    int offset(int part, int degree) const;
};

SumLayout direct_sum_layout(std::vector<Complex> parts);
Complex direct_sum(const std::vector<Complex>& parts);

/// shift(C,p)^n = C^{n+p}; pure regrading, no sign on the differential.
Complex shift(const Complex& c, int p);

} // namespace twistkit
