#pragma once

#include "twistkit/elementary.hpp"
#include "twistkit/report.hpp"
#include "twistkit/simplex.hpp"

namespace twistkit {

/// p-simplex of the dg-nerve of the dg-category of complexes: one complex
/// per vertex and, for every face I = {i_0 < ... < i_k} with |I| >= 2, a
/// morphism f_I of degree 1-k from the complex at i_k to the complex at i_0.
/// Morphisms run from the last vertex to the first and are never flipped.
struct DgSimplex {
    std::vector<Complex> objects;
    std::map<std::vector<int>, GradedMap> morphisms;

    int dim() const { return int(objects.size()) - 1; }
    const GradedMap& label(const std::vector<int>& face) const;

    bool operator==(const DgSimplex&) const = default;
};

/// 0-simplex on a single complex.
DgSimplex dg_point(const Complex& c);
/// 1-simplex on a chain map f : objects[1] -> objects[0].
DgSimplex dg_edge(const GradedMap& f);
/// Nerve simplex from composable edge maps edge[i] : x_{i+1} -> x_i, with
/// longer faces filled by strict composition and all |I| >= 3 labels zero.
DgSimplex nerve_simplex(const std::vector<Complex>& objects,
                        const std::vector<GradedMap>& edges);

/// Checks shapes and the defining relation on every face of cardinality >= 2
/// (a chain-map condition when |I| = 2).  Records one entry per failing face.
Report validate_dg_simplex(const DgSimplex& s);

/// Relation residual for one face; zero iff the face satisfies the relation
///   ∂f_I = Σ_{j=1}^{k-1} (-1)^{j-1} f_{I\{i_j}}
///        + Σ_{j=1}^{k-1} (-1)^{k(j-1)+1} f_{I(0..j)} ∘ f_{I(j..k)}.
GradedMap dg_relation_residual(const DgSimplex& s, const std::vector<int>& face);

DgSimplex dg_face(const DgSimplex& s, int i);
/// Duplicates vertex i; the new edge gets the identity and every face
/// containing both copies with cardinality >= 3 gets the zero label.
DgSimplex dg_degeneracy(const DgSimplex& s, int i);

/// Restriction of s to the sub-simplex spanned by `vertices`.
DgSimplex sub_simplex(const DgSimplex& s, const std::vector<int>& vertices);

/// Every edge label a quasi-isomorphism.
bool in_core(const DgSimplex& s);
/// f_I = 0 for |I| >= 3 and every edge an isomorphism.
bool is_ordinary_core(const DgSimplex& s);
/// f_I = 0 for |I| >= 3.
bool is_nerve_simplex(const DgSimplex& s);

} // namespace twistkit
