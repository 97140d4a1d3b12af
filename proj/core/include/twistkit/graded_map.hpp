#pragma once

#include "twistkit/complex.hpp"

#include <map>

namespace twistkit {

/// Degree-n family of matrices between two complexes: an element of
/// Hom^n(C,D) with components f^m : C^m -> D^{m+n}.  Components outside the
/// overlapping support are implicitly zero and never stored.
class GradedMap {
public:
    GradedMap() : GradedMap(Complex{}, Complex{}, 0) {}
    GradedMap(Complex source, Complex target, int degree);

    static GradedMap zero(const Complex& source, const Complex& target, int degree) {
        return GradedMap(source, target, degree);
    }
    static GradedMap identity(const Complex& c);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int degree() const { return degree_; }

    Matrix component(int m) const;
    void set_component(int m, const Matrix& mat);
    const std::map<int, Matrix>& components() const { return comps_; }

    /// Degrees m where a nonzero component is representable.
    int lo_degree() const;
    int hi_degree() const;

    bool is_zero() const { return comps_.empty(); }
    bool operator==(const GradedMap& o) const;
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap operator-() const;
    GradedMap scaled(const Scalar& s) const;

    /// Number of nonzero matrix entries across components.
    int nnz() const;

    /// True when every component matrix is square and invertible and the
    /// complexes have equal dimensions degree-wise (degree must be 0).
    bool invertible() const;
    /// Exact inverse of an invertible degree-0 map.
    GradedMap inverted() const;

private:
    Complex source_;
    Complex target_;
    int degree_;
    std::map<int, Matrix> comps_;
};

/// (∂f)^n = f^{n+1} ∘ d_C + (-1)^{p+1} d_D ∘ f^n for f of degree p.
GradedMap hom_differential(const GradedMap& f);

/// g ∘ f (apply f first); degrees add.
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Chain map test: degree 0 and ∂f = 0.
bool is_chain_map(const GradedMap& f);

} // namespace twistkit
