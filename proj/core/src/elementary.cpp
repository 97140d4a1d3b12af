#include "twistkit/elementary.hpp"

namespace twistkit {

namespace {

Complex span(int dim, int placement, Field f) {
    return Complex(f, placement, {dim, dim}, {Matrix::identity(dim, f)});
}

} // namespace

Complex build_elementary(const ElementaryDecl& decl, Field f) {
    std::vector<Complex> parts;
    for (auto [d, p] : decl.summands) {
        if (d <= 0) throw Error("invalid-input", "elementary summand dimension must be positive");
        parts.push_back(span(d, p, f));
    }
    if (parts.empty()) return Complex::zero(f);
    return direct_sum(parts);
}

GradedMap elementary_morphism(const ElementaryDecl& src, const ElementaryDecl& tgt, int k,
                              Field f) {
    Complex e = build_elementary(src, f);
    Complex e2 = build_elementary(tgt, f);
    GradedMap out(e, e2, k);
    if (k != 0) return out;
    std::vector<bool> used(tgt.summands.size(), false);
    std::vector<std::pair<int, int>> matches; // (src index, tgt index)
    for (std::size_t i = 0; i < src.summands.size(); ++i)
        for (std::size_t j = 0; j < tgt.summands.size(); ++j) {
            if (used[j] || src.summands[i] != tgt.summands[j]) continue;
            used[j] = true;
            matches.emplace_back(int(i), int(j));
            break;
        }
    auto offset = [](const ElementaryDecl& d, int upto, int degree) {
        int off = 0;
        for (int s = 0; s < upto; ++s) {
            auto [dim, place] = d.summands[s];
            if (degree == place || degree == place + 1) off += dim;
        }
        return off;
    };
    std::map<int, Matrix> comps;
    for (auto [i, j] : matches) {
        auto [dim, place] = src.summands[i];
        for (int degree : {place, place + 1}) {
            auto it = comps.find(degree);
            if (it == comps.end())
                it = comps.emplace(degree, Matrix::zero(e2.dim(degree), e.dim(degree), f)).first;
            int roff = offset(tgt, j, degree);
            int coff = offset(src, i, degree);
            it->second.set_block(roff, coff, Matrix::identity(dim, f));
        }
    }
    for (auto& [degree, mat] : comps) out.set_component(degree, mat);
    return out;
}

bool is_elementary(const Complex& c, bool strict) {
    if (!is_acyclic(c)) return false;
    if (!strict) return true;
    Field f = c.field();
    for (int n = c.lo(); n < c.hi(); ++n) {
        Matrix d = c.diff(n);
        std::vector<int> row_count(d.rows(), 0);
        for (int j = 0; j < d.cols(); ++j) {
            int col_count = 0;
            for (int i = 0; i < d.rows(); ++i) {
                const Scalar& s = d.at(i, j);
                if (s.is_zero()) continue;
                if (s != Scalar::one(f)) return false;
                ++col_count;
                if (++row_count[i] > 1) return false;
            }
            if (col_count > 1) return false;
        }
    }
    return true;
}

GradedMap elementary_contraction(const ElementaryDecl& decl, Field f) {
    Complex e = build_elementary(decl, f);
    GradedMap h(e, e, -1);
    auto offset = [&](int upto, int degree) {
        int off = 0;
        for (int s = 0; s < upto; ++s) {
            auto [dim, place] = decl.summands[s];
            if (degree == place || degree == place + 1) off += dim;
        }
        return off;
    };
    std::map<int, Matrix> comps;
    for (std::size_t i = 0; i < decl.summands.size(); ++i) {
        auto [dim, place] = decl.summands[i];
        int src_degree = place + 1;
        auto it = comps.find(src_degree);
        if (it == comps.end())
            it = comps.emplace(src_degree, Matrix::zero(e.dim(place), e.dim(src_degree), f)).first;
        it->second.set_block(offset(int(i), place), offset(int(i), src_degree),
                             Matrix::identity(dim, f));
    }
    for (auto& [degree, mat] : comps) h.set_component(degree, mat);
    return h;
}

GradedMap sum_inclusion(const SumLayout& layout, int part) {
    const Complex& p = layout.parts[part];
    GradedMap incl(p, layout.total, 0);
    for (int n = p.lo(); n <= p.hi(); ++n) {
        if (p.dim(n) == 0) continue;
        Matrix m(layout.total.dim(n), p.dim(n), p.field());
        m.set_block(layout.offset(part, n), 0, Matrix::identity(p.dim(n), p.field()));
        incl.set_component(n, m);
    }
    return incl;
}

GradedMap sum_projection(const SumLayout& layout, int part) {
    const Complex& p = layout.parts[part];
    GradedMap proj(layout.total, p, 0);
    for (int n = p.lo(); n <= p.hi(); ++n) {
        if (p.dim(n) == 0) continue;
        Matrix m(p.dim(n), layout.total.dim(n), p.field());
        m.set_block(0, layout.offset(part, n), Matrix::identity(p.dim(n), p.field()));
        proj.set_component(n, m);
    }
    return proj;
}

SummandHomotopy summand_homotopy(const Complex& c, const Complex& span_e) {
    Field f = c.field();
    if (span_e.is_zero_complex() || span_e.amplitude() != 1 ||
        span_e.dim(span_e.lo()) != span_e.dim(span_e.hi()) ||
        span_e.diff(span_e.lo()) != Matrix::identity(span_e.dim(span_e.lo()), f))
        throw Error("unsupported-shape", "summand homotopy needs a single identity span");
    SumLayout layout = direct_sum_layout({c, span_e});
    SummandHomotopy out{sum_inclusion(layout, 0), sum_projection(layout, 0),
                        GradedMap(layout.total, layout.total, -1), layout};
    int place = span_e.lo();
    int m = span_e.dim(place);
    Matrix block(layout.total.dim(place), layout.total.dim(place + 1), f);
    Matrix neg = -Matrix::identity(m, f);
    block.set_block(layout.offset(1, place), layout.offset(1, place + 1), neg);
    out.homotopy.set_component(place + 1, block);
    return out;
}

SplitAcyclic split_acyclic(const Complex& c) {
    Field f = c.field();
    if (c.is_zero_complex())
        return SplitAcyclic{ElementaryDecl{}, GradedMap(Complex::zero(f), c, 0)};
    if (!is_acyclic(c)) throw Error("not-splittable", "complex is not acyclic");

    int n0 = c.lo();
    int m = c.dim(n0);
    Matrix d0 = c.diff(n0);
    // Acyclicity at the bottom degree makes d0 injective.
    // Extend im(d0) to a basis of C^{n0+1} by standard vectors.
    int n1dim = c.dim(n0 + 1);
    std::vector<int> w_cols;
    {
        Matrix probe(n1dim, m, f);
        probe.set_block(0, 0, d0);
        int have = probe.rank();
        for (int k = 0; k < n1dim && have < n1dim; ++k) {
            Matrix bigger(n1dim, probe.cols() + 1, f);
            bigger.set_block(0, 0, probe);
            bigger.at(k, probe.cols()) = Scalar::one(f);
            if (bigger.rank() > have) {
                probe = bigger;
                ++have;
                w_cols.push_back(k);
            }
        }
    }
    int w = int(w_cols.size());
    Matrix wmat(n1dim, w, f);
    for (int j = 0; j < w; ++j) wmat.at(w_cols[j], j) = Scalar::one(f);

    // Residual complex: W in degree n0+1, untouched above.
    std::vector<int> dims{w};
    std::vector<Matrix> diffs;
    for (int n = n0 + 2; n <= c.hi(); ++n) dims.push_back(c.dim(n));
    if (c.hi() >= n0 + 2) diffs.push_back(c.diff(n0 + 1) * wmat);
    for (int n = n0 + 2; n < c.hi(); ++n) diffs.push_back(c.diff(n));
    Complex rest(f, n0 + 1, std::move(dims), std::move(diffs));

    SplitAcyclic inner = split_acyclic(rest);

    ElementaryDecl decl;
    decl.summands.emplace_back(m, n0);
    decl.summands.insert(decl.summands.end(), inner.decl.summands.begin(),
                         inner.decl.summands.end());
    Complex model = build_elementary(decl, f);

    GradedMap iso(model, c, 0);
    for (int n = model.lo(); n <= model.hi(); ++n) {
        if (model.dim(n) == 0) continue;
        Matrix comp(c.dim(n), model.dim(n), f);
        int col = 0;
        if (n == n0) {
            comp.set_block(0, 0, Matrix::identity(m, f));
            col += m;
        } else if (n == n0 + 1) {
            comp.set_block(0, 0, d0);
            col += m;
        }
        // Remaining columns come from the inner iso, post-composed with the
        // inclusion of `rest` into C (W columns at degree n0+1, identity above).
        int inner_cols = model.dim(n) - col;
        if (inner_cols > 0) {
            Matrix ic = inner.iso.component(n);
            Matrix included =
                (n == n0 + 1) ? wmat * ic : ic; // above n0+1 rest sits in C verbatim
            comp.set_block(0, col, included);
        }
        iso.set_component(n, comp);
    }
    return SplitAcyclic{std::move(decl), std::move(iso)};
}

} // namespace twistkit
