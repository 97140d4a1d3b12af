#pragma once

#include "twistkit/graded_map.hpp"

namespace twistkit {

struct HomologyAt {
    int dim = 0;
    /// Columns are cycle representatives of a basis of H^n.
    Matrix representatives;
};

/// dim H^n = dim ker d^n - rank d^{n-1}, with explicit representatives.
HomologyAt homology(const Complex& c, int n);

/// Matrix of the induced map H^n(source) -> H^n(target) of a chain map, in
/// the representative bases chosen by homology().
Matrix induced_on_homology(const GradedMap& f, int n);

bool is_quasi_iso(const GradedMap& f);

/// Mapping cone of a chain map f : C -> D, with cone^n = C^{n+1} ⊕ D^n.
Complex mapping_cone(const GradedMap& f);

bool is_acyclic(const Complex& c);

} // namespace twistkit
