#pragma once

#include "twistkit/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace twistkit {

/// Nondegenerate simplex of the prism Δ[p]×Δ[1]: a strictly increasing path
/// of grid vertices (i, j) with 0 <= i <= p and j in {0,1} (each step raises
/// at least one coordinate and lowers neither).
struct PrismSimplex {
    std::vector<std::pair<int, int>> path;

    PrismSimplex() = default;
    explicit PrismSimplex(std::vector<std::pair<int, int>> pts);

    int dim() const { return int(path.size()) - 1; }
    /// Drop the vertex at position `pos` (faces of the path).
    PrismSimplex drop(int pos) const;
    /// Sub-path [from..to] inclusive.
    PrismSimplex segment(int from, int to) const;
    /// True when every vertex lies in row j.
    bool in_row(int j) const;

    auto operator<=>(const PrismSimplex&) const = default;
};

std::string to_string(const PrismSimplex& s);

/// All nondegenerate q-simplices of Δ[p]×Δ[1], lexicographic.  Empty when
/// q > p+1 (not an error).
std::vector<PrismSimplex> prism_simplices(int p, int q);

/// The p+1 nondegenerate (p+1)-simplices of Δ[p]×Δ[1], ordered by the number
/// of bottom-row steps before the vertical step.
std::vector<PrismSimplex> prism_top(int p);

} // namespace twistkit
