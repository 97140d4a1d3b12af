#pragma once

#include "twistkit/dg_simplex.hpp"
#include "twistkit/pair_subdivision.hpp"

namespace twistkit {

/// Stored direct-sum decomposition: an invertible chain map from
/// base ⊕ complement onto the bigger complex, together with its inverse.
struct Trivialisation {
    GradedMap theta;
    GradedMap theta_inv;

    bool operator==(const Trivialisation&) const = default;
};

/// Elementary orthogonal complement datum attached to one vertex of a cell.
struct CellLabel {
    ElementaryDecl decl;
    Complex complement;
    Trivialisation triv;

    bool operator==(const CellLabel&) const = default;
};

/// Labelling of the pair subdivision of the standard p-simplex: dg-nerve
/// simplices on the 0-cells (one per face sigma, of dimension |sigma|-1),
/// and elementary complements with trivialisations on the higher cells
/// (one CellLabel per vertex of tau for each pair tau ⊂ sigma).
struct GTTLabelling {
    int dim = 0;
    std::map<std::vector<int>, DgSimplex> vertex_labels;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<CellLabel>> cell_labels;

    const DgSimplex& at(const std::vector<int>& sigma) const;
    const std::vector<CellLabel>& cell(const std::vector<int>& tau,
                                       const std::vector<int>& sigma) const;
    /// Complex at vertex j of the face sigma.
    const Complex& complex_at(int j, const std::vector<int>& sigma) const;
    /// Morphism labelling the sub-face J of sigma (J in global vertex ids).
    GradedMap phi(const std::vector<int>& j_global, const std::vector<int>& sigma) const;

    bool operator==(const GTTLabelling&) const = default;
};

/// Full validation: (a) dg-nerve relations on every 0-cell, (i) stored
/// trivialisations are mutually inverse chain isos from the literal direct
/// sum (this is also the diagonal-differential requirement), (ii) the
/// tau-trivialised phi_K(sigma) is block upper-triangular with diagonal
/// blocks phi_K(tau) and the elementary morphism (the latter mismatch is a
/// warning).  strict_elementary switches the complement check.
Report validate_gtt(const GTTLabelling& l, bool strict_elementary = false);

/// Vertex labels lie in the ordinary nerve with isomorphism edges.
bool is_gtt1(const GTTLabelling& l);

GTTLabelling gtt_face(const GTTLabelling& l, int i);
GTTLabelling gtt_degeneracy(const GTTLabelling& l, int i);

/// Core dg-nerve simplex placed on the central vertex, faces on the other
/// vertices, zero complements everywhere.
GTTLabelling include_twist(const DgSimplex& s);

/// Identity coercion of a GTT-1-labelling (checks the defining conditions).
GTTLabelling include_green(const GTTLabelling& l);

/// Fills the 2-horn with the two given edges at the positions dictated by
/// horn_index (0: edges {01},{02}; 1: edges {01},{12}; 2: edges {02},{12});
/// edge arguments in that order.  Outer horns invert a padded edge through
/// constructive homotopy inversion; the inner horn composes strictly.
GTTLabelling fill_horn2(const GTTLabelling& edge_a, const GTTLabelling& edge_b, int horn_index);

/// Green variant: all edges isomorphisms, third edge by exact inversion,
/// homotopy exactly zero.
GTTLabelling fill_horn2_green(const GTTLabelling& edge_a, const GTTLabelling& edge_b,
                              int horn_index);

struct Strictified {
    Complex a_tilde;
    Complex b_tilde;
    GradedMap f_tilde; // b_tilde -> a_tilde, invertible chain map
    ElementaryDecl decl_a;
    ElementaryDecl decl_b;
    SumLayout layout_a; // parts = {A, E_A}
    SumLayout layout_b; // parts = {B, E_B}
    Report self_check;
};

/// Strictification of a quasi-isomorphism f : B -> A of bounded free
/// complexes: pads both sides by elementary complexes and produces an
/// isomorphism whose A-block restricted to B is exactly f.  When f is
/// degreewise injective no A-side padding is needed and the restriction is
/// exact on the nose.
Strictified strictify(const GradedMap& f);

/// Single quasi-isomorphism read off a 1-simplex between included points:
/// projection ∘ middle quasi-iso ∘ inclusion, as a dg-nerve edge.
DgSimplex connect_compose(const GTTLabelling& path);

/// Green 1-simplex obtained by strictifying the middle quasi-isomorphism of
/// a 1-simplex between Green endpoints; the original complements survive as
/// declared summands.
GTTLabelling connect_strictify(const GTTLabelling& path);

} // namespace twistkit
