#include "twistkit/graded_map.hpp"

namespace twistkit {

GradedMap::GradedMap(Complex source, Complex target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    if (source_.field() != target_.field())
        throw Error("field-mismatch", "graded map between different fields");
}

GradedMap GradedMap::identity(const Complex& c) {
    GradedMap f(c, c, 0);
    for (int m = c.lo(); m <= c.hi(); ++m)
        if (c.dim(m) > 0) f.set_component(m, Matrix::identity(c.dim(m), c.field()));
    return f;
}

Matrix GradedMap::component(int m) const {
    auto it = comps_.find(m);
    if (it != comps_.end()) return it->second;
    return Matrix::zero(target_.dim(m + degree_), source_.dim(m), source_.field());
}

void GradedMap::set_component(int m, const Matrix& mat) {
    if (mat.rows() != target_.dim(m + degree_) || mat.cols() != source_.dim(m))
        throw Error("malformed-map", "component shape mismatch at degree " + std::to_string(m));
    if (mat.is_zero()) comps_.erase(m);
    else comps_[m] = mat;
}

int GradedMap::lo_degree() const { return std::max(source_.lo(), target_.lo() - degree_); }
int GradedMap::hi_degree() const { return std::min(source_.hi(), target_.hi() - degree_); }

bool GradedMap::operator==(const GradedMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ &&
           comps_ == o.comps_;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_)
        throw Error("malformed-map", "graded map addition mismatch");
    GradedMap r = *this;
    for (const auto& [m, mat] : o.comps_) r.set_component(m, r.component(m) + mat);
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + (-o); }

GradedMap GradedMap::operator-() const {
    GradedMap r = *this;
    for (auto& [m, mat] : r.comps_) mat = -mat;
    return r;
}

GradedMap GradedMap::scaled(const Scalar& s) const {
    GradedMap r(source_, target_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [m, mat] : comps_) r.set_component(m, mat.scaled(s));
    return r;
}

int GradedMap::nnz() const {
    int n = 0;
    for (const auto& [m, mat] : comps_) n += mat.nnz();
    return n;
}

bool GradedMap::invertible() const {
    if (degree_ != 0) return false;
    int lo = std::min(source_.lo(), target_.lo());
    int hi = std::max(source_.hi(), target_.hi());
    for (int m = lo; m <= hi; ++m) {
        if (source_.dim(m) != target_.dim(m)) return false;
        if (source_.dim(m) == 0) continue;
        if (!component(m).invertible()) return false;
    }
    return true;
}

GradedMap GradedMap::inverted() const {
    if (!invertible()) throw Error("not-invertible", "graded map is not invertible");
    GradedMap r(target_, source_, 0);
    for (int m = target_.lo(); m <= target_.hi(); ++m) {
        if (target_.dim(m) == 0) continue;
        r.set_component(m, *component(m).inverse());
    }
    return r;
}

GradedMap hom_differential(const GradedMap& f) {
    const Complex& c = f.source();
    const Complex& d = f.target();
    int p = f.degree();
    GradedMap out(c, d, p + 1);
    bool flip = ((p + 1) % 2) != 0;
    for (int n = out.lo_degree(); n <= out.hi_degree(); ++n) {
        Matrix term = f.component(n + 1) * c.diff(n);
        Matrix second = d.diff(n + p) * f.component(n);
        term = flip ? term - second : term + second;
        if (!term.is_zero()) out.set_component(n, term);
    }
    return out;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.target() != g.source())
        throw Error("composition-error", "compose: target/source complexes differ");
    GradedMap out(f.source(), g.target(), f.degree() + g.degree());
    for (int m = out.lo_degree(); m <= out.hi_degree(); ++m) {
        Matrix prod = g.component(m + f.degree()) * f.component(m);
        if (!prod.is_zero()) out.set_component(m, prod);
    }
    return out;
}

bool is_chain_map(const GradedMap& f) {
    if (f.degree() != 0) throw Error("wrong-degree", "chain map test needs degree 0");
    return hom_differential(f).is_zero();
}

} // namespace twistkit
