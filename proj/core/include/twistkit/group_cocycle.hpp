#pragma once

#include "twistkit/report.hpp"
#include "twistkit/tuple_space.hpp"

namespace twistkit {

/// Matrix-group cocycle over a cover: one invertible n×n matrix per ordered
/// pair of distinct indices with present intersection.
struct PrincipalCocycle {
    Cover cover;
    int n = 0;
    std::map<std::pair<int, int>, Matrix> g;
};

/// Identity condition on inverse pairs and g_{bc} g_{ab} = g_{ac}; singular
/// matrices are rejected.
Report validate_principal_cocycle(const PrincipalCocycle& c);

/// Gauge relation h_{ab} λ_a = λ_b g_{ab} between two cocycles on the same
/// cover, witnessed by invertible per-index matrices λ.
Report validate_gauge(const std::map<int, Matrix>& lambda, const PrincipalCocycle& g,
                      const PrincipalCocycle& h);

} // namespace twistkit
