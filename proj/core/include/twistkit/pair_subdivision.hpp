#pragma once

#include "twistkit/simplex.hpp"

#include <map>

namespace twistkit {

/// Cell of the pair subdivision of the standard simplex: a pair of faces
/// tau ⊆ sigma; the cell dimension is the codimension of tau in sigma.
struct PairCell {
    Face tau;
    Face sigma;

    PairCell(Face t, Face s);
    int dim() const { return sigma.dim() - tau.dim(); }

    auto operator<=>(const PairCell&) const = default;
};

std::string to_string(const PairCell& c);

/// Integer chain of pair cells; zero coefficients are never stored.
struct CellChain {
    std::map<PairCell, long> terms;

    void add(const PairCell& c, long coeff);
    CellChain& operator+=(const CellChain& o);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const CellChain&) const = default;
};

/// All cells of the pair subdivision of the standard p-simplex, ordered by
/// dimension then lexicographically.
std::vector<PairCell> pair_cells(int p);

/// Signed cellular boundary.  The simplicial part deletes a vertex of sigma
/// (keeping tau inside) with the alternating sign of the deleted position;
/// the cosimplicial part inserts a vertex into tau (staying inside sigma)
/// with the alternating sign of the inserted position, globally weighted by
/// (-1)^codim.  This is the unique sign choice of this shape squaring to zero.
CellChain pair_boundary(const PairCell& c);

CellChain pair_boundary(const CellChain& chain);

} // namespace twistkit
