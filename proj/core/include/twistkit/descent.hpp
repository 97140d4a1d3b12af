#pragma once

#include "twistkit/cech.hpp"
#include "twistkit/gtt.hpp"

namespace twistkit {

/// Bounded complexes of free modules glued by strict isomorphism cocycles.
struct LocFreeData {
    Cover cover;
    Labelling labelling;
    std::map<std::pair<int, int>, GradedMap> edges; // (a,b), a != b: E_b -> E_a
};

/// Cocycle closure (target-source composable), identity on inverse pairs,
/// invertibility of every edge.  A perturbed edge is flagged at exactly the
/// triangles containing it.
Report validate_locfree(const LocFreeData& d);

/// Twisting cochain: labelling plus a Maurer-Cartan element whose edge
/// components are quasi-isomorphisms.
struct TwistingCochainData {
    Cover cover;
    Labelling labelling;
    BigradedElement mc;
};

Report validate_twisting_cochain(const TwistingCochainData& d);

/// Strict cocycles are twisting cochains with zero higher components.
TwistingCochainData locfree_to_twist(const LocFreeData& d);

/// Green complexes and simplicial twisting cochains over a cover: one GTT
/// labelling per increasing valid tuple (the ordered fragment), coherent
/// under face maps.
struct SimplicialTwistData {
    Cover cover;
    std::map<Tuple, GTTLabelling> tuples; // keys strictly increasing, all lengths
};

Report validate_stc(const SimplicialTwistData& d, bool strict_elementary = false);
Report validate_green(const SimplicialTwistData& d, bool strict_elementary = false);

/// Tuple-wise inclusion of a twisting cochain (zero complements everywhere).
SimplicialTwistData stc_from_twist(const TwistingCochainData& d);

/// Arrays in the classical simplicial-twisting-cochain notation, with the
/// per-face Maurer-Cartan check.
struct STCExport {
    struct FaceRecord {
        Tuple tuple;                       // ambient tuple
        Tuple sigma;                       // face (subset of the tuple's positions)
        std::map<int, std::vector<int>> e_dims;             // alpha -> dims of E_{sigma,alpha}
        std::map<std::pair<Tuple, int>, std::vector<int>> perp_dims; // (tau, alpha) -> dims
        std::map<Tuple, GradedMap> a_components;            // J -> sigma-a^{|J|-1, 2-|J|}
        bool mc_ok = false;
    };
    std::vector<FaceRecord> faces;
    Report report;
};

STCExport export_stc_notation(const SimplicialTwistData& d);

/// Path between two twisting cochains: a Maurer-Cartan element over the
/// prism space (nerve × interval) whose row restrictions are the endpoints.
struct TwistPathData {
    Cover cover;               // the base cover
    TupleSpace prism;          // prism_of(cover.space)
    Labelling labelling;       // per prism vertex (index, row)
    BigradedElement mc;        // over the prism space
};

/// Endpoint twisting cochain at row 0 (E) or row 1 (F).
TwistingCochainData path_endpoint(const TwistPathData& p, int row);

/// Constant path on a twisting cochain: the pullback along the projection of
/// the prism onto the nerve (identity verticals, edge diagonals, forced
/// values over repeats).
TwistPathData degenerate_path(const TwistingCochainData& d);

/// Per-simplex dg-nerve relation over the prism, plus quasi-isomorphism of
/// the vertical edges.
Report validate_path(const TwistPathData& p);

/// Weak equivalence of twisting cochains: components F_{a_p} -> E_{a_0} of
/// bidegree (p, -p), quasi-isomorphisms on the diagonal.
struct WeakEquivalenceData {
    TwistingCochainData e;
    TwistingCochainData f;
    std::map<Tuple, GradedMap> lambda; // nondegenerate tuples, degree -(|t|-1)
};

/// Alternating sum of the top prism simplices per tuple.
WeakEquivalenceData path_to_weq(const TwistPathData& p);

/// Residuals of δ̂λ + Eλ - λF = 0 per tuple and bidegree (differentials act
/// as the degree-(0,1) column), plus quasi-iso checks on the diagonal.
Report validate_weq(const WeakEquivalenceData& w);

} // namespace twistkit
