#include "twistkit/homology.hpp"

namespace twistkit {

HomologyAt homology(const Complex& c, int n) {
    Field f = c.field();
    Matrix dn = c.diff(n);
    Matrix dprev = c.diff(n - 1);
    Matrix cycles = dn.kernel_basis(); // dim(n) x z
    // Pick cycle columns independent modulo the boundaries.
    Matrix span(c.dim(n), dprev.cols() + cycles.cols(), f);
    span.set_block(0, 0, dprev);
    int base = dprev.rank();
    std::vector<int> chosen;
    int have = base;
    for (int j = 0; j < cycles.cols(); ++j) {
        span.set_block(0, dprev.cols() + int(chosen.size()), cycles.block(0, j, cycles.rows(), 1));
        Matrix probe = span.block(0, 0, span.rows(), dprev.cols() + int(chosen.size()) + 1);
        if (probe.rank() > have) {
            chosen.push_back(j);
            ++have;
        }
    }
    HomologyAt h;
    h.dim = int(chosen.size());
    h.representatives = Matrix(c.dim(n), h.dim, f);
    for (int j = 0; j < h.dim; ++j)
        h.representatives.set_block(0, j, cycles.block(0, chosen[j], cycles.rows(), 1));
    return h;
}

Matrix induced_on_homology(const GradedMap& f, int n) {
    if (f.degree() != 0) throw Error("wrong-degree", "induced map needs a chain map");
    HomologyAt hs = homology(f.source(), n);
    HomologyAt ht = homology(f.target(), n);
    Field fld = f.source().field();
    Matrix images = f.component(n) * hs.representatives; // dim_t(n) x hs.dim
    // Express images in (boundaries | representatives); homology coordinates
    // are the representative block.
    Matrix dprev = f.target().diff(n - 1);
    Matrix basis(f.target().dim(n), dprev.cols() + ht.dim, fld);
    basis.set_block(0, 0, dprev);
    basis.set_block(0, dprev.cols(), ht.representatives);
    auto sol = basis.solve(images);
    if (!sol) throw Error("invalid-input", "image of a cycle is not a cycle");
    return sol->block(dprev.cols(), 0, ht.dim, images.cols());
}

bool is_quasi_iso(const GradedMap& f) {
    if (f.degree() != 0) throw Error("wrong-degree", "quasi-iso test needs degree 0");
    if (!hom_differential(f).is_zero()) return false;
    int lo = std::min(f.source().lo(), f.target().lo());
    int hi = std::max(f.source().hi(), f.target().hi());
    for (int n = lo; n <= hi; ++n) {
        HomologyAt hs = homology(f.source(), n);
        HomologyAt ht = homology(f.target(), n);
        if (hs.dim != ht.dim) return false;
        if (hs.dim == 0) continue;
        if (!induced_on_homology(f, n).invertible()) return false;
    }
    return true;
}

Complex mapping_cone(const GradedMap& f) {
    if (f.degree() != 0 || !hom_differential(f).is_zero())
        throw Error("wrong-degree", "mapping cone needs a chain map");
    const Complex& c = f.source();
    const Complex& d = f.target();
    Field fld = c.field();
    int lo = std::min(c.lo() - 1, d.lo());
    int hi = std::max(c.hi() - 1, d.hi());
    if (hi < lo) return Complex::zero(fld);
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(c.dim(n + 1) + d.dim(n));
    std::vector<Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        Matrix m(c.dim(n + 2) + d.dim(n + 1), c.dim(n + 1) + d.dim(n), fld);
        m.set_block(0, 0, -c.diff(n + 1));
        m.set_block(c.dim(n + 2), 0, f.component(n + 1));
        m.set_block(c.dim(n + 2), c.dim(n + 1), d.diff(n));
        diffs.push_back(std::move(m));
    }
    return Complex(fld, lo, std::move(dims), std::move(diffs));
}

bool is_acyclic(const Complex& c) {
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (homology(c, n).dim != 0) return false;
    return true;
}

} // namespace twistkit
