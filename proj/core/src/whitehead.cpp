#include "twistkit/elementary.hpp"

namespace twistkit {

namespace {

/// Chain iso  H ⊕ E -> C  splitting a bounded complex into its homology
/// (zero differential) plus an elementary part, with explicit bases:
/// ker d = boundaries ⊕ representatives, and a complement L with
/// d : L^n ≅ boundaries^{n+1}.
struct Harmonic {
    Complex h;          // homology with zero differential
    ElementaryDecl decl;
    SumLayout layout;   // parts = {h, build_elementary(decl)}
    GradedMap rho;      // H ⊕ E -> C
    GradedMap rho_inv;
};

Harmonic harmonic_decomposition(const Complex& c) {
    Field f = c.field();
    std::map<int, Matrix> reps;   // homology representatives per degree
    std::map<int, Matrix> lcols;  // complement-of-cycles columns per degree
    std::vector<int> hdims;
    int lo = c.lo(), hi = c.hi();
    for (int n = lo; n <= hi; ++n) {
        HomologyAt hn = homology(c, n);
        reps[n] = hn.representatives;
        hdims.push_back(hn.dim);
        // Extend (boundaries | representatives) to a basis of C^n; the new
        // columns complement the cycles.
        Matrix dprev = c.diff(n - 1);
        Matrix probe(c.dim(n), dprev.cols() + hn.dim, f);
        probe.set_block(0, 0, dprev);
        probe.set_block(0, dprev.cols(), hn.representatives);
        int have = probe.rank();
        std::vector<int> chosen;
        for (int k = 0; k < c.dim(n) && have < c.dim(n); ++k) {
            Matrix bigger(c.dim(n), probe.cols() + 1, f);
            bigger.set_block(0, 0, probe);
            bigger.at(k, probe.cols()) = Scalar::one(f);
            if (bigger.rank() > have) {
                probe = bigger;
                ++have;
                chosen.push_back(k);
            }
        }
        Matrix l(c.dim(n), int(chosen.size()), f);
        for (int j = 0; j < int(chosen.size()); ++j) l.at(chosen[j], j) = Scalar::one(f);
        lcols[n] = l;
    }

    Harmonic out{Complex::zero(f), {}, {}, GradedMap(Complex::zero(f), Complex::zero(f), 0),
                 GradedMap(Complex::zero(f), Complex::zero(f), 0)};
    if (!hdims.empty()) {
        std::vector<Matrix> zds;
        for (std::size_t i = 0; i + 1 < hdims.size(); ++i)
            zds.push_back(Matrix::zero(hdims[i + 1], hdims[i], f));
        out.h = Complex(f, lo, hdims, zds);
    }
    for (int n = lo; n <= hi; ++n)
        if (lcols[n].cols() > 0) out.decl.summands.emplace_back(lcols[n].cols(), n);
    Complex e = build_elementary(out.decl, f);
    out.layout = direct_sum_layout({out.h, e});

    GradedMap rho(out.layout.total, c, 0);
    for (int n = lo; n <= hi; ++n) {
        if (out.layout.total.dim(n) == 0) continue;
        Matrix comp(c.dim(n), out.layout.total.dim(n), f);
        comp.set_block(0, 0, reps[n]);
        int col = out.h.dim(n);
        // Elementary summands in declaration order: placement n-1 contributes
        // its top copy (mapped by d), placement n its bottom copy (L columns).
        for (auto [dim, place] : out.decl.summands) {
            if (place == n - 1) {
                comp.set_block(0, col, c.diff(n - 1) * lcols[n - 1]);
                col += dim;
            } else if (place == n) {
                comp.set_block(0, col, lcols[n]);
                col += dim;
            }
        }
        rho.set_component(n, comp);
    }
    out.rho = rho;
    out.rho_inv = rho.inverted();
    return out;
}

/// Contraction of the elementary part, extended by zero on H.
GradedMap sum_contraction(const Harmonic& h, Field f) {
    GradedMap he = elementary_contraction(h.decl, f);
    GradedMap incl = sum_inclusion(h.layout, 1);
    GradedMap proj = sum_projection(h.layout, 1);
    return compose(incl, compose(he, proj));
}

} // namespace

WhiteheadInverse whitehead_inverse(const GradedMap& f) {
    if (f.degree() != 0) throw Error("wrong-degree", "whitehead inverse needs degree 0");
    if (f.invertible()) {
        GradedMap g = f.inverted();
        return WhiteheadInverse{g, GradedMap(f.source(), f.source(), -1),
                                GradedMap(f.target(), f.target(), -1)};
    }
    if (!is_quasi_iso(f)) throw Error("no-inverse", "map is not a quasi-isomorphism");

    Harmonic hs = harmonic_decomposition(f.source());
    Harmonic ht = harmonic_decomposition(f.target());
    Field fld = f.source().field();

    GradedMap fhat = compose(ht.rho_inv, compose(f, hs.rho));
    // Homology-to-homology block, inverted.
    GradedMap ghat(ht.layout.total, hs.layout.total, 0);
    for (int n = hs.h.lo(); n <= hs.h.hi(); ++n) {
        int hsd = hs.h.dim(n), htd = ht.h.dim(n);
        if (hsd == 0 && htd == 0) continue;
        if (hsd != htd) throw Error("no-inverse", "homology dimensions differ");
        Matrix hh = fhat.component(n).block(0, 0, htd, hsd);
        auto inv = hh.inverse();
        if (!inv) throw Error("no-inverse", "induced homology map is singular");
        Matrix comp(hs.layout.total.dim(n), ht.layout.total.dim(n), fld);
        comp.set_block(0, 0, *inv);
        ghat.set_component(n, comp);
    }

    GradedMap id_s = GradedMap::identity(hs.layout.total);
    GradedMap id_t = GradedMap::identity(ht.layout.total);
    GradedMap ds = compose(ghat, fhat) - id_s;
    GradedMap dt = compose(fhat, ghat) - id_t;
    GradedMap hs0 = sum_contraction(hs, fld);
    GradedMap ht0 = sum_contraction(ht, fld);
    GradedMap hb_hat = compose(ds, hs0);
    GradedMap ha_hat = compose(ht0, dt);

    WhiteheadInverse out{compose(hs.rho, compose(ghat, ht.rho_inv)),
                         compose(hs.rho, compose(hb_hat, hs.rho_inv)),
                         compose(ht.rho, compose(ha_hat, ht.rho_inv))};
    return out;
}

} // namespace twistkit
