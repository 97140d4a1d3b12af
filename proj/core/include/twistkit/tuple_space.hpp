#pragma once

#include "twistkit/complex.hpp"

#include <set>
#include <string>
#include <vector>

namespace twistkit {

using Tuple = std::vector<int>;

std::string to_string(const Tuple& t);

/// The index tuples over which bigraded elements live.  Two flavours share
/// the interface: simplicial sets presented by vertex tuples (nondegenerate
/// simplices are strictly increasing tuples whose support is present) and
/// Čech nerves of covers (tuples with no adjacent repeats whose support is a
/// declared nonempty intersection).
class TupleSpace {
public:
    /// Δ[n]: strictly increasing tuples over n+1 vertices, all supports.
    static TupleSpace standard_simplex(int n);
    /// Simplicial complex with the given facets (downward closed).
    static TupleSpace complex_from_facets(int n_vertices, const std::vector<Tuple>& facets);
    /// Čech nerve: no-adjacent-repeat tuples with declared support.
    static TupleSpace cech(int n_vertices, const std::vector<Tuple>& present_facets);
    /// Čech nerve of a cover whose every intersection is nonempty.
    static TupleSpace cech_full(int n_vertices);
    /// Product of a Čech nerve with the interval: vertices encode (index, row)
    /// as 2*index + row; simplices are tuples with no adjacent repeats, rows
    /// nondecreasing, and index support present in the base.
    static TupleSpace prism_of(const TupleSpace& cech_base);

    bool prism_mode() const { return prism_; }
    static int prism_vertex(int index, int row) { return 2 * index + row; }
    static int prism_index(int v) { return v / 2; }
    static int prism_row(int v) { return v % 2; }

    int vertex_count() const { return n_; }
    bool increasing_only() const { return increasing_only_; }
    /// Nondegenerate and present in the space.
    bool valid(const Tuple& t) const;
    /// A simplex of the space, degenerate or not.
    bool allowed(const Tuple& t) const;
    bool support_present(const Tuple& t) const;
    /// All valid tuples with p+1 entries, lexicographic.
    std::vector<Tuple> tuples(int p) const;
    /// All supported tuples with p+1 entries, degenerate included.
    std::vector<Tuple> all_tuples(int p) const;

    bool operator==(const TupleSpace&) const = default;

    const std::set<Tuple>& present_sets() const { return present_; }
    bool all_present() const { return all_present_; }

private:
    int n_ = 0;
    bool increasing_only_ = true;
    bool all_present_ = true;
    bool prism_ = false;
    std::set<Tuple> present_; // sorted vertex sets, downward closed
};

/// Open cover presented combinatorially: indices 0..n-1 plus the nerve.
struct Cover {
    TupleSpace space;

    bool operator==(const Cover&) const = default;
};

/// Labelling of the cover's indices (or the space's vertices) by complexes.
struct Labelling {
    std::vector<Complex> complexes;

    const Complex& at(int i) const { return complexes.at(i); }
    int size() const { return int(complexes.size()); }
    /// Largest amplitude among the labels (-1 when all zero).
    int amplitude() const;
    /// Width of the union of all supports: max hi - min lo (-1 when all
    /// zero).  Hom components between labels vanish above spread()+1.
    int spread() const;
    Field field() const;

    bool operator==(const Labelling&) const = default;
};

} // namespace twistkit
