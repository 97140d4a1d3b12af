#include "twistkit/tuple_space.hpp"

#include <algorithm>

namespace twistkit {

std::string to_string(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

namespace {

std::set<Tuple> close_downward(const std::vector<Tuple>& facets) {
    std::set<Tuple> out;
    for (const Tuple& f : facets) {
        Tuple sorted = f;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        int m = int(sorted.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            Tuple sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(sorted[i]);
            out.insert(sub);
        }
    }
    return out;
}

} // namespace

TupleSpace TupleSpace::standard_simplex(int n) {
    TupleSpace s;
    s.n_ = n + 1;
    s.increasing_only_ = true;
    s.all_present_ = true;
    return s;
}

TupleSpace TupleSpace::complex_from_facets(int n_vertices, const std::vector<Tuple>& facets) {
    TupleSpace s;
    s.n_ = n_vertices;
    s.increasing_only_ = true;
    s.all_present_ = false;
    s.present_ = close_downward(facets);
    return s;
}

TupleSpace TupleSpace::cech(int n_vertices, const std::vector<Tuple>& present_facets) {
    TupleSpace s;
    s.n_ = n_vertices;
    s.increasing_only_ = false;
    s.all_present_ = false;
    s.present_ = close_downward(present_facets);
    for (int i = 0; i < n_vertices; ++i)
        if (!s.present_.count({i}))
            throw Error("invalid-input", "every cover index must be present");
    return s;
}

TupleSpace TupleSpace::cech_full(int n_vertices) {
    TupleSpace s;
    s.n_ = n_vertices;
    s.increasing_only_ = false;
    s.all_present_ = true;
    return s;
}

TupleSpace TupleSpace::prism_of(const TupleSpace& cech_base) {
    if (cech_base.increasing_only_)
        throw Error("invalid-input", "prism spaces are built over Čech nerves");
    TupleSpace s;
    s.n_ = 2 * cech_base.n_;
    s.increasing_only_ = false;
    s.all_present_ = cech_base.all_present_;
    s.prism_ = true;
    s.present_ = cech_base.present_;
    return s;
}

bool TupleSpace::support_present(const Tuple& t) const {
    for (int v : t)
        if (v < 0 || v >= n_) return false;
    if (prism_) {
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (prism_row(t[i]) > prism_row(t[i + 1])) return false;
        if (all_present_) return true;
        Tuple support;
        for (int v : t) support.push_back(prism_index(v));
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        return present_.count(support) > 0;
    }
    if (all_present_) return true;
    Tuple support = t;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return present_.count(support) > 0;
}

bool TupleSpace::valid(const Tuple& t) const {
    if (t.empty()) return false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (increasing_only_ ? !(t[i] < t[i + 1]) : t[i] == t[i + 1]) return false;
    }
    return support_present(t);
}

bool TupleSpace::allowed(const Tuple& t) const {
    if (t.empty()) return false;
    if (increasing_only_)
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] > t[i + 1]) return false;
    return support_present(t);
}

namespace {

void enumerate(const TupleSpace& space, int p, bool allow_degenerate, bool increasing_only,
               std::vector<Tuple>& out) {
    Tuple cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == p + 1) {
            if (space.support_present(cur)) out.push_back(cur);
            return;
        }
        int start = 0;
        if (!cur.empty() && increasing_only) start = allow_degenerate ? cur.back() : cur.back() + 1;
        for (int v = start; v < space.vertex_count(); ++v) {
            if (!cur.empty() && !increasing_only && !allow_degenerate && v == cur.back()) continue;
            cur.push_back(v);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<Tuple> TupleSpace::tuples(int p) const {
    std::vector<Tuple> out;
    if (p < 0) return out;
    enumerate(*this, p, false, increasing_only_, out);
    return out;
}

std::vector<Tuple> TupleSpace::all_tuples(int p) const {
    std::vector<Tuple> out;
    if (p < 0) return out;
    enumerate(*this, p, true, increasing_only_, out);
    return out;
}

int Labelling::amplitude() const {
    int a = -1;
    for (const Complex& c : complexes) a = std::max(a, c.amplitude());
    return a;
}

int Labelling::spread() const {
    bool any = false;
    int lo = 0, hi = -1;
    for (const Complex& c : complexes) {
        if (c.is_zero_complex()) continue;
        if (!any) {
            lo = c.lo();
            hi = c.hi();
            any = true;
        } else {
            lo = std::min(lo, c.lo());
            hi = std::max(hi, c.hi());
        }
    }
    return any ? hi - lo : -1;
}

Field Labelling::field() const {
    if (complexes.empty()) return Field{};
    return complexes.front().field();
}

} // namespace twistkit
