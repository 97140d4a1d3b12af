#pragma once

#include "twistkit/scalar.hpp"

#include <compare>
#include <vector>

namespace twistkit {

/// Nondegenerate face of the standard simplex on {0..ambient}: a strictly
/// increasing, nonempty vertex list.
struct Face {
    std::vector<int> vertices;
    int ambient = 0;

    Face() = default;
    Face(std::vector<int> verts, int amb);

    int dim() const { return int(vertices.size()) - 1; }
    bool contains(const Face& other) const; // other ⊆ this, same ambient
    bool contains_vertex(int v) const;

    /// this with vertex at position `pos` removed.
    Face drop(int pos) const;
    /// this with vertex v inserted (v must be absent).
    Face insert(int v) const;

    auto operator<=>(const Face&) const = default;
};

std::string to_string(const Face& f);

/// All k-dimensional faces of the standard p-simplex, lexicographic.
std::vector<Face> enumerate_faces(int p, int k);

/// All nonempty faces of the standard p-simplex, by dimension then lexicographic.
std::vector<Face> all_faces(int p);

/// Nondegenerate simplices of the i-th horn of the standard p-simplex:
/// the faces F with F ∪ {i} ≠ [p] (all faces except the top face and the
/// facet opposite vertex i).
std::vector<Face> horn_simplices(int p, int i);

/// Strictly increasing chains S_0 ⊂ … ⊂ S_q of nonempty faces of the
/// standard p-simplex (the q-simplices of the barycentric subdivision).
std::vector<std::vector<Face>> bary_flags(int p, int q);

/// Connected components via union-find; vertices labelled 0..n-1, edges as
/// endpoint pairs.  Returns the partition, each class sorted, classes ordered
/// by least element.
std::vector<std::vector<int>> components(int n_vertices,
                                         const std::vector<std::pair<int, int>>& edges);

} // namespace twistkit
