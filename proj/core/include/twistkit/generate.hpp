#pragma once

#include "twistkit/cech.hpp"

#include <optional>
#include <random>

namespace twistkit {

/// Deterministic source of small exact scalars and structured random data.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi); // inclusive, portable across platforms
    bool chance(int percent);
    Scalar small_scalar(Field f, int magnitude = 2);

    Matrix matrix(int rows, int cols, Field f, int magnitude = 2, int sparsity_percent = 50);
    /// Unit lower-triangular times unit upper-triangular times a permutation:
    /// always invertible, small entries.
    Matrix invertible(int n, Field f, int magnitude = 1);

private:
    std::mt19937_64 eng_;
};

/// Random bounded complex assembled from homology points and identity spans,
/// conjugated by a random degreewise change of basis (so d² = 0 exactly and
/// the homology is known by construction).
Complex random_complex(Rng& rng, Field f, int lo, int hi, int max_dim_per_degree);

/// Random degreewise-invertible chain iso out of c (target built by
/// conjugating the differential).
GradedMap random_chain_iso(Rng& rng, const Complex& c);

/// Random graded map of the given degree (no chain condition).
GradedMap random_graded_map(Rng& rng, const Complex& src, const Complex& tgt, int degree,
                            int magnitude = 1, int sparsity_percent = 60);

/// Solve ∂X = rhs in the hom-complex; nullopt when rhs is not exact.
std::optional<GradedMap> solve_hom_differential(const GradedMap& rhs);

struct TwistFixture {
    TupleSpace space;
    Labelling labelling;
    BigradedElement mc;
};

struct TwistGenOptions {
    int amplitude = 1;          // base complex support [0, amplitude]
    int max_dim = 2;            // per-degree dimension cap of the base complex
    bool pad_elementary = true; // direct-sum random elementary complements per vertex
    bool perturb = true;        // transport along a random invertible degree-0 element
    bool iso_edges = false;     // strict conjugated isomorphism cocycle (no padding)
};

/// Twisting-cochain-style fixture over the given space.  A trivial cocycle is
/// conjugated by random chain isos and padded by elementary complements; the
/// resulting deformation-retract data (with side conditions) yields a
/// Maurer-Cartan element in closed form, which is then transported along a
/// random invertible degree-0 element.  Always satisfies is_mc.
TwistFixture gen_twist(Rng& rng, const TupleSpace& space, const TwistGenOptions& opt, Field f);

/// Random invertible degree-0 element: identity diagonal plus random
/// (p, -p) components.
BigradedElement random_gauge(Rng& rng, const TupleSpace& space, const Labelling& labelling,
                             int max_p = 2);

struct PathFixture {
    TupleSpace base;       // the cover's nerve
    TupleSpace prism;      // base × interval
    Labelling labelling;   // over the prism vertices (index, row)
    BigradedElement mc;    // Maurer-Cartan element over the prism space
};

/// Valid path fixture: a Maurer-Cartan element over the prism space whose
/// two row restrictions are twisting cochains.
PathFixture gen_path(Rng& rng, const TupleSpace& base, const TwistGenOptions& opt, Field f);

/// Random simplex of the core of the dg-nerve (labels quasi-isomorphisms),
/// built from a twist fixture over the standard simplex.
DgSimplex random_core_simplex(Rng& rng, int p, Field f, const TwistGenOptions& opt);

} // namespace twistkit
