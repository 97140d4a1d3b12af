#pragma once

#include "twistkit/homology.hpp"

namespace twistkit {

/// Declaration of an elementary complex: summands (module dimension,
/// placement degree), each standing for an identity span occupying degrees
/// (placement, placement+1).  Summands are laid out in declaration order.
struct ElementaryDecl {
    std::vector<std::pair<int, int>> summands; // (dim, placement)

    bool empty() const { return summands.empty(); }
    bool operator==(const ElementaryDecl&) const = default;
};

Complex build_elementary(const ElementaryDecl& decl, Field f);

/// The unique "maximal" matching of equal summands: identity on every span
/// present (same dimension, same placement) in both declarations, matched
/// greedily in declaration order; zero map for k != 0.
GradedMap elementary_morphism(const ElementaryDecl& src, const ElementaryDecl& tgt, int k,
                              Field f);

/// Non-strict mode: acyclic.  Strict mode: acyclic and every differential is
/// a 0/1 partial-permutation matrix.
bool is_elementary(const Complex& c, bool strict);

/// Contraction h of build_elementary(decl): degree -1 with dh + hd = id.
GradedMap elementary_contraction(const ElementaryDecl& decl, Field f);

/// Inclusion of / projection onto one part of a direct sum.
GradedMap sum_inclusion(const SumLayout& layout, int part);
GradedMap sum_projection(const SumLayout& layout, int part);

struct SummandHomotopy {
    GradedMap inclusion;  // C -> C ⊕ E
    GradedMap projection; // C ⊕ E -> C
    GradedMap homotopy;   // degree -1 on C ⊕ E, ∂h = i∘p - id
    SumLayout layout;     // parts = {C, E}
};

/// Homotopy-retraction data for the inclusion of C into C ⊕ E where E is a
/// single identity span; the homotopy has exactly one nonzero component, the
/// block (0, -id_M) mapping the span's top copy onto its bottom copy.
SummandHomotopy summand_homotopy(const Complex& c, const Complex& span_e);

struct SplitAcyclic {
    ElementaryDecl decl;
    GradedMap iso; // build_elementary(decl) -> C, invertible chain map
};

/// Splits a bounded acyclic complex as an explicit elementary complex.
SplitAcyclic split_acyclic(const Complex& c);

struct WhiteheadInverse {
    GradedMap g;  // target -> source chain map
    GradedMap hB; // on source, ∂hB = g∘f - id_source
    GradedMap hA; // on target, ∂hA = f∘g - id_target
};

/// Constructive homotopy inverse of a quasi-isomorphism of bounded free
/// complexes.  Degreewise-invertible maps get their exact inverse and zero
/// homotopies.
WhiteheadInverse whitehead_inverse(const GradedMap& f);

} // namespace twistkit
