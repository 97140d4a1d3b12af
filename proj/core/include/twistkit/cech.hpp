#pragma once

#include "twistkit/dg_simplex.hpp"
#include "twistkit/tuple_space.hpp"

namespace twistkit {

/// Element of the bigraded dg-algebra over a tuple space: a finite family of
/// graded maps, one per (nondegenerate tuple, internal degree q), where the
/// component at (a_0..a_p) maps the complex at a_p to the complex at a_0.
/// Absent components are zero; degenerate tuples carry forced values
/// (identity for the repeated edge, zero above).
class BigradedElement {
public:
    BigradedElement(TupleSpace space, Labelling labelling)
        : space_(std::move(space)), labelling_(std::move(labelling)) {}

    const TupleSpace& space() const { return space_; }
    const Labelling& labelling() const { return labelling_; }

    GradedMap component(const Tuple& t, int q) const;
    void set_component(const Tuple& t, int q, const GradedMap& f);
    const std::map<std::pair<Tuple, int>, GradedMap>& components() const { return comps_; }

    /// Bidegrees (p, q) with at least one stored component.
    std::vector<std::pair<int, int>> bidegrees() const;
    bool is_zero() const { return comps_.empty(); }
    bool compatible_with(const BigradedElement& o) const;

    bool operator==(const BigradedElement&) const = default;

    BigradedElement operator+(const BigradedElement& o) const;
    BigradedElement operator-(const BigradedElement& o) const;
    BigradedElement scaled(const Scalar& s) const;

private:
    TupleSpace space_;
    Labelling labelling_;
    std::map<std::pair<Tuple, int>, GradedMap> comps_;
};

/// Forced-value lookup used wherever simplicial data is read off an element:
/// stored component for nondegenerate tuples (zero when absent), identity for
/// the degenerate edge (a,a) at q = 0, zero for longer degenerate tuples.
GradedMap resolve_component(const BigradedElement& e, const Tuple& t, int q);

/// (p,q) -> (p+1,q): (δ̂f)_L = Σ_{i=1}^{p} (-1)^i f_{L minus vertex i}.
/// Deletions landing on degenerate tuples contribute zero, which makes this
/// the restriction of the all-tuples operator to elements vanishing on
/// degenerate tuples; δ̂∘δ̂ = 0 exactly.
BigradedElement deleted_cech_diff(const BigradedElement& f);

/// The Maurer-Cartan residual Df + f·f with the classical normalization of
/// degenerate tuples (identity edges over repeated indices).
BigradedElement mc_residual(const BigradedElement& f);

/// f plus the forced identity edges over repeated indices and the (0,1)
/// column of differentials read off the labelling.
BigradedElement augmented_mc(const BigradedElement& f);

/// Identity diagonal: component id at (a) in bidegree (0,0) for every index.
BigradedElement diagonal_identity(const TupleSpace& space, const Labelling& labelling);

/// Inverse of a degree-0 element with invertible diagonal under the cup
/// product (Neumann series; the off-diagonal part is nilpotent).
BigradedElement cup_inverse(const BigradedElement& lambda);

/// Transport of a Maurer-Cartan element along an invertible degree-0
/// element: the unique g with δ̂λ + f·λ - λ·g = 0 (augmented products).
/// Returns g stripped back to bidegrees (p, 1-p) on nondegenerate tuples.
BigradedElement transport_mc(const BigradedElement& f, const BigradedElement& lambda);

/// Residual δ̂λ + e·λ - λ·f of a degree-0 element between two Maurer-Cartan
/// elements, differentials included (the weak-equivalence equation).
BigradedElement intertwine_residual(const BigradedElement& e_mc, const BigradedElement& f_mc,
                                    const BigradedElement& lambda);

/// (p,q) -> (p,q+1): componentwise (-1)^{q+1} ∂.
BigradedElement internal_diff(const BigradedElement& f);

/// Graded product: component at M of length p+r+1 is
/// (-1)^{qr} f_{M[0..p]} ∘ g_{M[p..p+r]}.
BigradedElement cup(const BigradedElement& f, const BigradedElement& g);

/// D = δ̂ + (-1)^p ∂.
BigradedElement total_diff(const BigradedElement& f);

/// Maurer-Cartan residual Df + f·f, reported per (tuple, bidegree).
/// Components must sit in bidegrees (p, 1-p) with p >= 1.
Report is_mc(const BigradedElement& f);

/// Family of dg-nerve simplices, one per valid tuple.
using SimplexFamily = std::map<Tuple, DgSimplex>;

/// Functorial extension of per-simplex top labels to full labellings of
/// every face.  `maps` holds one graded map per valid tuple of
/// length >= 2 (absent = zero); the result assigns every face of every
/// tuple its sub-tuple label, with forced values on degenerate sub-tuples.
/// The report lists tuples whose labels fail the defining relation.
struct SpineExtension {
    SimplexFamily family;
    Report report;
};
SpineExtension extend_spine(const TupleSpace& space, const Labelling& labelling,
                            const std::map<Tuple, GradedMap>& maps, int max_dim,
                            bool validate = true);

/// MC element -> validated simplex family (throws conversion-refused with
/// the residual report on non-MC input).
SimplexFamily mc_to_labelling(const BigradedElement& f, int max_dim = -1);

/// Simplex family -> MC element; validates functoriality of the family.
BigradedElement labelling_to_mc(const TupleSpace& space, const Labelling& labelling,
                                const SimplexFamily& family);

} // namespace twistkit
