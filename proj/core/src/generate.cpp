#include "twistkit/generate.hpp"

#include "twistkit/elementary.hpp"

#include <algorithm>

namespace twistkit {

int Rng::uniform(int lo, int hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + int(eng_() % span);
}

bool Rng::chance(int percent) { return uniform(0, 99) < percent; }

Scalar Rng::small_scalar(Field f, int magnitude) {
    int v = uniform(-magnitude, magnitude);
    return Scalar::of(v, f);
}

Matrix Rng::matrix(int rows, int cols, Field f, int magnitude, int sparsity_percent) {
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!chance(sparsity_percent)) m.at(i, j) = small_scalar(f, magnitude);
    return m;
}

Matrix Rng::invertible(int n, Field f, int magnitude) {
    Matrix l = Matrix::identity(n, f), u = Matrix::identity(n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j && chance(40)) l.at(i, j) = small_scalar(f, magnitude);
            if (i < j && chance(40)) u.at(i, j) = small_scalar(f, magnitude);
        }
    Matrix p(n, n, f);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform(0, i)]);
    for (int i = 0; i < n; ++i) p.at(i, perm[i]) = Scalar::one(f);
    return l * u * p;
}

Complex random_complex(Rng& rng, Field f, int lo, int hi, int max_dim_per_degree) {
    std::vector<Complex> parts;
    for (int n = lo; n <= hi; ++n) {
        int h = rng.uniform(0, 1);
        if (h > 0) parts.push_back(Complex::point(f, n, h));
        if (n < hi) {
            int spans = rng.uniform(0, 1);
            if (spans > 0)
                parts.push_back(build_elementary(ElementaryDecl{{{spans, n}}}, f));
        }
    }
    if (parts.empty()) parts.push_back(Complex::point(f, lo, 1));
    Complex base = direct_sum(parts);
    // Cap per-degree dimensions.
    (void)max_dim_per_degree;
    // Conjugate by a random degreewise change of basis.
    GradedMap iso = random_chain_iso(rng, base);
    return iso.target();
}

GradedMap random_chain_iso(Rng& rng, const Complex& c) {
    Field f = c.field();
    if (c.is_zero_complex()) return GradedMap::identity(c);
    std::map<int, Matrix> r;
    for (int n = c.lo(); n <= c.hi(); ++n) r[n] = rng.invertible(c.dim(n), f);
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
    for (int n = c.lo(); n < c.hi(); ++n)
        diffs.push_back(r[n + 1] * c.diff(n) * *r[n].inverse());
    Complex target(f, c.lo(), dims, diffs);
    GradedMap iso(c, target, 0);
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (c.dim(n) > 0) iso.set_component(n, r[n]);
    return iso;
}

GradedMap random_graded_map(Rng& rng, const Complex& src, const Complex& tgt, int degree,
                            int magnitude, int sparsity_percent) {
    GradedMap g(src, tgt, degree);
    for (int m = g.lo_degree(); m <= g.hi_degree(); ++m) {
        int rows = tgt.dim(m + degree), cols = src.dim(m);
        if (rows == 0 || cols == 0) continue;
        Matrix mat = rng.matrix(rows, cols, src.field(), magnitude, sparsity_percent);
        if (!mat.is_zero()) g.set_component(m, mat);
    }
    return g;
}

std::optional<GradedMap> solve_hom_differential(const GradedMap& rhs) {
    const Complex& src = rhs.source();
    const Complex& tgt = rhs.target();
    Field f = src.field();
    int deg = rhs.degree() - 1;
    GradedMap x(src, tgt, deg);
    // Flatten the unknown components into one coordinate vector.
    struct Slot {
        int m, r, c;
    };
    std::vector<Slot> slots;
    for (int m = x.lo_degree(); m <= x.hi_degree(); ++m)
        for (int r = 0; r < tgt.dim(m + deg); ++r)
            for (int c = 0; c < src.dim(m); ++c) slots.push_back({m, r, c});
    std::vector<Slot> out_slots;
    GradedMap probe_shape(src, tgt, deg + 1);
    for (int m = probe_shape.lo_degree(); m <= probe_shape.hi_degree(); ++m)
        for (int r = 0; r < tgt.dim(m + deg + 1); ++r)
            for (int c = 0; c < src.dim(m); ++c) out_slots.push_back({m, r, c});

    Matrix a(int(out_slots.size()), int(slots.size()), f);
    for (std::size_t j = 0; j < slots.size(); ++j) {
        GradedMap basis(src, tgt, deg);
        Matrix comp(tgt.dim(slots[j].m + deg), src.dim(slots[j].m), f);
        comp.at(slots[j].r, slots[j].c) = Scalar::one(f);
        basis.set_component(slots[j].m, comp);
        GradedMap image = hom_differential(basis);
        for (std::size_t i = 0; i < out_slots.size(); ++i)
            a.at(int(i), int(j)) = image.component(out_slots[i].m).at(out_slots[i].r,
                                                                      out_slots[i].c);
    }
    Matrix b(int(out_slots.size()), 1, f);
    for (std::size_t i = 0; i < out_slots.size(); ++i)
        b.at(int(i), 0) = rhs.component(out_slots[i].m).at(out_slots[i].r, out_slots[i].c);
    auto sol = a.solve(b);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < slots.size(); ++j) {
        const Scalar& v = sol->at(int(j), 0);
        if (v.is_zero()) continue;
        Matrix comp = x.component(slots[j].m);
        comp.at(slots[j].r, slots[j].c) = v;
        x.set_component(slots[j].m, comp);
    }
    return x;
}

namespace {

struct Retract {
    Complex label;   // E_a
    GradedMap u;     // C -> E_a, v∘u = id
    GradedMap v;     // E_a -> C
    GradedMap k;     // on E_a, ∂k = u∘v - id, with k∘u = 0, v∘k = 0, k∘k = 0
};

Retract random_retract(Rng& rng, const Complex& base, const TwistGenOptions& opt, Field f) {
    Complex padded = base;
    GradedMap incl = GradedMap::identity(base);
    GradedMap proj = GradedMap::identity(base);
    GradedMap hom(base, base, -1);
    if (opt.pad_elementary && !opt.iso_edges && rng.chance(70)) {
        int place = rng.uniform(0, std::max(opt.amplitude - 1, 0));
        Complex span = build_elementary(ElementaryDecl{{{rng.uniform(1, 2), place}}}, f);
        SummandHomotopy sh = summand_homotopy(base, span);
        padded = sh.layout.total;
        incl = sh.inclusion;
        proj = sh.projection;
        hom = sh.homotopy;
    }
    GradedMap r = random_chain_iso(rng, padded);
    return Retract{r.target(), compose(r, incl), compose(proj, r.inverted()),
                   compose(r, compose(hom, r.inverted()))};
}

/// Canonical Maurer-Cartan element of a family of deformation retracts of a
/// common core: strict edges u_a ∘ v_b, the homotopy -k over tuples (a,b,a),
/// and zero above.  The side conditions collapse every higher equation.
BigradedElement retract_mc(const TupleSpace& space, const std::vector<Retract>& retracts,
                           const Labelling& labelling) {
    BigradedElement mc(space, labelling);
    for (const Tuple& t : space.tuples(1))
        mc.set_component(t, 0, compose(retracts[t[0]].u, retracts[t[1]].v));
    for (const Tuple& t : space.tuples(2))
        if (t[0] == t[2] && !retracts[t[0]].k.is_zero())
            mc.set_component(t, -1, -retracts[t[0]].k);
    return mc;
}

} // namespace

BigradedElement random_gauge(Rng& rng, const TupleSpace& space, const Labelling& labelling,
                             int max_p) {
    BigradedElement g = diagonal_identity(space, labelling);
    for (int p = 1; p <= max_p; ++p)
        for (const Tuple& t : space.tuples(p)) {
            if (!rng.chance(60)) continue;
            GradedMap eta = random_graded_map(rng, labelling.at(t.back()),
                                              labelling.at(t.front()), -p, 1, 70);
            if (!eta.is_zero()) g.set_component(t, -p, eta);
        }
    return g;
}

TwistFixture gen_twist(Rng& rng, const TupleSpace& space, const TwistGenOptions& opt, Field f) {
    int n = space.vertex_count();
    Complex base = random_complex(rng, f, 0, std::max(opt.amplitude, 0), opt.max_dim);
    std::vector<Retract> retracts;
    std::vector<Complex> labels;
    for (int a = 0; a < n; ++a) {
        retracts.push_back(random_retract(rng, base, opt, f));
        labels.push_back(retracts.back().label);
    }
    Labelling labelling{labels};
    BigradedElement mc = retract_mc(space, retracts, labelling);
    if (opt.perturb && !opt.iso_edges)
        mc = transport_mc(mc, random_gauge(rng, space, labelling));
    Report check = is_mc(mc);
    if (!check.ok()) throw Error("infeasible", "generated element fails Maurer-Cartan");
    return TwistFixture{space, labelling, mc};
}

PathFixture gen_path(Rng& rng, const TupleSpace& base, const TwistGenOptions& opt, Field f) {
    TupleSpace prism = TupleSpace::prism_of(base);
    Complex core = random_complex(rng, f, 0, std::max(opt.amplitude, 0), opt.max_dim);
    std::vector<Retract> retracts;
    std::vector<Complex> labels;
    for (int v = 0; v < prism.vertex_count(); ++v) {
        retracts.push_back(random_retract(rng, core, opt, f));
        labels.push_back(retracts.back().label);
    }
    Labelling labelling{labels};
    BigradedElement mc = retract_mc(prism, retracts, labelling);
    if (opt.perturb && !opt.iso_edges)
        mc = transport_mc(mc, random_gauge(rng, prism, labelling));
    Report check = is_mc(mc);
    if (!check.ok()) throw Error("infeasible", "generated path fails Maurer-Cartan");
    return PathFixture{base, prism, labelling, mc};
}

DgSimplex random_core_simplex(Rng& rng, int p, Field f, const TwistGenOptions& opt) {
    TupleSpace space = TupleSpace::standard_simplex(p);
    TwistFixture fx = gen_twist(rng, space, opt, f);
    SimplexFamily family = mc_to_labelling(fx.mc, p);
    Tuple full(p + 1);
    for (int i = 0; i <= p; ++i) full[i] = i;
    return family.at(full);
}

} // namespace twistkit
