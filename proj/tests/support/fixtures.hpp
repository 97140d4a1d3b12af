#pragma once

// Shared fuzz fixtures for the unit and acceptance suites.

#include "twistkit/generate.hpp"
#include "twistkit/gtt.hpp"

namespace twistkit::fixtures {

/// Corner of a horn: a complex quasi-isomorphic to a shared base, with the
/// comparison maps (v∘u = id on the base).
struct Corner {
    Complex e;
    GradedMap u; // base -> e
    GradedMap v; // e -> base
};

inline Corner make_corner(Rng& rng, const Complex& base) {
    Complex padded = base;
    GradedMap incl = GradedMap::identity(base);
    GradedMap proj = GradedMap::identity(base);
    if (rng.chance(60)) {
        Complex span =
            build_elementary(ElementaryDecl{{{rng.uniform(1, 2), rng.uniform(0, 1)}}},
                             base.field());
        SummandHomotopy sh = summand_homotopy(base, span);
        padded = sh.layout.total;
        incl = sh.inclusion;
        proj = sh.projection;
    }
    GradedMap r = random_chain_iso(rng, padded);
    return Corner{r.target(), compose(r, incl), compose(proj, r.inverted())};
}

/// Valid GTT 1-simplex between two corners over the same base: both middles
/// pad their endpoint by an elementary span conjugated by a random chain
/// iso; the middle map zig-zags through the base (iso in green mode) and is
/// then homotopy-perturbed.
inline GTTLabelling make_edge(Rng& rng, const Corner& a, const Corner& b, bool green) {
    Field q = a.e.field();
    auto pad = [&](const Complex& corner) {
        Complex span =
            build_elementary(ElementaryDecl{{{rng.uniform(1, 2), rng.uniform(0, 1)}}}, q);
        SummandHomotopy sh = summand_homotopy(corner, span);
        GradedMap r = random_chain_iso(rng, sh.layout.total);
        return CellLabel{ElementaryDecl{{{span.dim(span.lo()), span.lo()}}}, span,
                         Trivialisation{r, r.inverted()}};
    };
    CellLabel cl0 = pad(a.e);
    CellLabel cl1 = pad(b.e);
    Complex mid0 = cl0.triv.theta.target();
    Complex mid1 = cl1.triv.theta.target();
    GradedMap phi(mid1, mid0, 0);
    if (green) {
        GradedMap r = random_chain_iso(rng, mid0);
        cl1 = CellLabel{cl0.decl, cl0.complement,
                        Trivialisation{compose(r, cl0.triv.theta),
                                       compose(cl0.triv.theta_inv, r.inverted())}};
        mid1 = r.target();
        phi = r.inverted();
    } else {
        GradedMap down =
            compose(b.v, compose(sum_projection(direct_sum_layout({b.e, cl1.complement}), 0),
                                 cl1.triv.theta_inv));
        GradedMap up =
            compose(cl0.triv.theta,
                    compose(sum_inclusion(direct_sum_layout({a.e, cl0.complement}), 0), a.u));
        phi = compose(up, down);
        GradedMap eta = random_graded_map(rng, mid1, mid0, -1, 1, 60);
        phi = phi + hom_differential(eta);
    }
    GTTLabelling e;
    e.dim = 1;
    e.vertex_labels.emplace(std::vector<int>{0}, dg_point(a.e));
    e.vertex_labels.emplace(std::vector<int>{1}, dg_point(green ? a.e : b.e));
    e.vertex_labels.emplace(std::vector<int>{0, 1}, dg_edge(phi));
    e.cell_labels.emplace(std::pair{std::vector<int>{0}, std::vector<int>{0, 1}},
                          std::vector<CellLabel>{cl0});
    e.cell_labels.emplace(std::pair{std::vector<int>{1}, std::vector<int>{0, 1}},
                          std::vector<CellLabel>{cl1});
    return e;
}

} // namespace twistkit::fixtures
