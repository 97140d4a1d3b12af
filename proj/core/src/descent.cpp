#include "twistkit/descent.hpp"

#include "twistkit/parallel.hpp"
#include "twistkit/prism.hpp"

#include <atomic>
#include <thread>

#include <algorithm>

namespace twistkit {

namespace {

int pow_sign(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

bool tuple_degenerate(const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

} // namespace

Report validate_locfree(const LocFreeData& d) {
    Report rep;
    const TupleSpace& space = d.cover.space;
    auto edge = [&](int a, int b) -> GradedMap {
        if (a == b) return GradedMap::identity(d.labelling.at(a));
        auto it = d.edges.find({a, b});
        if (it == d.edges.end())
            throw Error("incomplete", "missing edge (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
        return it->second;
    };
    for (const Tuple& t : space.tuples(1)) {
        GradedMap e = edge(t[0], t[1]);
        if (e.source() != d.labelling.at(t[1]) || e.target() != d.labelling.at(t[0]) ||
            e.degree() != 0) {
            rep.add({"edge-shape", to_string(t), 1, 0, 0, false, ""});
            continue;
        }
        if (!is_chain_map(e)) rep.add({"edge-not-chain-map", to_string(t), 1, 0, 0, false, ""});
        if (!e.invertible()) rep.add({"edge-not-invertible", to_string(t), 1, 0, 0, false, ""});
    }
    if (!rep.ok()) return rep;
    for (const Tuple& t : space.all_tuples(2)) {
        if (t[0] == t[1] || t[1] == t[2]) continue;
        GradedMap lhs = compose(edge(t[0], t[1]), edge(t[1], t[2]));
        GradedMap rhs = edge(t[0], t[2]);
        if (!(lhs == rhs)) {
            GradedMap diff = lhs - rhs;
            rep.add({"cocycle", to_string(t), 2, 0, diff.nnz(), false, ""});
        }
    }
    return rep;
}

Report validate_twisting_cochain(const TwistingCochainData& d) {
    Report rep = is_mc(d.mc);
    for (const Tuple& t : d.cover.space.tuples(1)) {
        GradedMap e = d.mc.component(t, 0);
        if (!is_quasi_iso(e))
            rep.add({"edge-not-quasi-iso", to_string(t), 1, 0, 0, false, ""});
    }
    return rep;
}

TwistingCochainData locfree_to_twist(const LocFreeData& d) {
    BigradedElement mc(d.cover.space, d.labelling);
    for (const auto& [key, e] : d.edges) mc.set_component({key.first, key.second}, 0, e);
    return TwistingCochainData{d.cover, d.labelling, mc};
}

namespace {

std::vector<Tuple> increasing_tuples(const TupleSpace& space) {
    std::vector<Tuple> out;
    for (int p = 0; p < space.vertex_count(); ++p)
        for (const Tuple& t : space.tuples(p))
            if (std::is_sorted(t.begin(), t.end()) &&
                std::adjacent_find(t.begin(), t.end()) == t.end())
                out.push_back(t);
    return out;
}

Report validate_simplicial(const SimplicialTwistData& d, bool strict_elementary, bool green) {
    Report rep;
    std::vector<Tuple> wanted = increasing_tuples(d.cover.space);
    std::vector<Report> per_tuple(wanted.size());
    auto check_one = [&](std::size_t idx) {
        const Tuple& t = wanted[idx];
        Report& out = per_tuple[idx];
        auto it = d.tuples.find(t);
        if (it == d.tuples.end()) {
            out.add({"incomplete", to_string(t), 0, 0, 0, false, "missing tuple labelling"});
            return;
        }
        const GTTLabelling& l = it->second;
        if (l.dim != int(t.size()) - 1) {
            out.add({"shape", to_string(t), 0, 0, 0, false, "labelling dimension mismatch"});
            return;
        }
        Report sub = validate_gtt(l, strict_elementary);
        for (Record r : sub.records) {
            r.where = to_string(t) + " " + r.where;
            out.add(std::move(r));
        }
        if (green && !is_gtt1(l))
            out.add({"not-gtt1", to_string(t), 0, 0, 0, false,
                     "vertex labels must be nerve simplices with invertible edges"});
    };
    unsigned workers = std::min<unsigned>(thread_cap(), std::max<std::size_t>(wanted.size(), 1));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < wanted.size(); ++idx) check_one(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t idx = next.fetch_add(1); idx < wanted.size();
                     idx = next.fetch_add(1))
                    check_one(idx);
            });
        for (auto& th : pool) th.join();
    }
    for (Report& r : per_tuple) rep.merge(r);
    for (const auto& [t, l] : d.tuples)
        if (std::find(wanted.begin(), wanted.end(), t) == wanted.end())
            rep.add({"unknown-tuple", to_string(t), 0, 0, 0, false,
                     "tuple not in the ordered fragment of the cover"});
    if (!rep.ok()) return rep;
    // Tot coherence: facet data of each tuple equals the facet tuples' data.
    for (const Tuple& t : wanted) {
        if (t.size() < 2) continue;
        const GTTLabelling& l = d.tuples.at(t);
        for (int i = 0; i < int(t.size()); ++i) {
            Tuple facet = t;
            facet.erase(facet.begin() + i);
            if (!(gtt_face(l, i) == d.tuples.at(facet)))
                rep.add({"coherence", to_string(t) + " face " + std::to_string(i), 0, 0, 0,
                         false, "facet labelling differs from the facet tuple's labelling"});
        }
    }
    return rep;
}

} // namespace

Report validate_stc(const SimplicialTwistData& d, bool strict_elementary) {
    return validate_simplicial(d, strict_elementary, false);
}

Report validate_green(const SimplicialTwistData& d, bool strict_elementary) {
    return validate_simplicial(d, strict_elementary, true);
}

SimplicialTwistData stc_from_twist(const TwistingCochainData& d) {
    SimplexFamily family = mc_to_labelling(d.mc, d.cover.space.vertex_count() - 1);
    SimplicialTwistData out{d.cover, {}};
    for (const Tuple& t : increasing_tuples(d.cover.space)) {
        auto it = family.find(t);
        if (it == family.end()) throw Error("incomplete", "missing simplex at " + to_string(t));
        if (!in_core(it->second))
            throw Error("refused", "twisting cochain edge is not a quasi-isomorphism");
        out.tuples.emplace(t, include_twist(it->second));
    }
    return out;
}

STCExport export_stc_notation(const SimplicialTwistData& d) {
    STCExport out;
    for (const auto& [t, l] : d.tuples) {
        for (const auto& [sigma_local, simplex] : l.vertex_labels) {
            STCExport::FaceRecord rec;
            rec.tuple = t;
            for (int idx : sigma_local) rec.sigma.push_back(t[idx]);
            // E_{sigma,alpha} dimensions.
            Labelling face_labels{simplex.objects};
            for (std::size_t m = 0; m < sigma_local.size(); ++m) {
                std::vector<int> dims;
                const Complex& c = simplex.objects[m];
                for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
                rec.e_dims[rec.sigma[m]] = dims;
            }
            // Complement dimensions per sub-face tau containing each alpha.
            for (const auto& [key, cells] : l.cell_labels) {
                if (key.second != sigma_local) continue;
                Tuple tau_glob;
                for (int idx : key.first) tau_glob.push_back(t[idx]);
                for (std::size_t m = 0; m < key.first.size(); ++m) {
                    std::vector<int> dims;
                    const Complex& c = cells[m].complement;
                    for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
                    rec.perp_dims[{tau_glob, t[key.first[m]]}] = dims;
                }
            }
            // sigma-a components and the (STC 2) Maurer-Cartan check.
            TupleSpace face_space = TupleSpace::standard_simplex(int(sigma_local.size()) - 1);
            BigradedElement a(face_space, face_labels);
            for (const auto& [j_local, g] : simplex.morphisms) {
                Tuple j_glob;
                for (int idx : j_local) j_glob.push_back(t[sigma_local[idx]]);
                rec.a_components.emplace(j_glob, g);
                a.set_component(Tuple(j_local.begin(), j_local.end()), 2 - int(j_local.size()),
                                g);
            }
            Report mc = is_mc(a);
            rec.mc_ok = mc.ok();
            if (!mc.ok())
                out.report.add({"stc2", to_string(t) + " face " + to_string(rec.sigma), 0, 0, 0,
                                false, "face family fails the Maurer-Cartan equation"});
            out.faces.push_back(std::move(rec));
        }
    }
    return out;
}

TwistingCochainData path_endpoint(const TwistPathData& p, int row) {
    if (row != 0 && row != 1) throw Error("invalid-index", "row must be 0 or 1");
    const TupleSpace& base = p.cover.space;
    std::vector<Complex> labels;
    for (int a = 0; a < base.vertex_count(); ++a)
        labels.push_back(p.labelling.at(TupleSpace::prism_vertex(a, row)));
    Labelling lab{labels};
    BigradedElement mc(base, lab);
    for (const auto& [key, comp] : p.mc.components()) {
        const Tuple& t = key.first;
        bool in_row = true;
        for (int v : t)
            if (TupleSpace::prism_row(v) != row) in_row = false;
        if (!in_row) continue;
        Tuple baset;
        for (int v : t) baset.push_back(TupleSpace::prism_index(v));
        mc.set_component(baset, key.second, comp);
    }
    return TwistingCochainData{p.cover, lab, mc};
}

TwistPathData degenerate_path(const TwistingCochainData& d) {
    TupleSpace prism = TupleSpace::prism_of(d.cover.space);
    std::vector<Complex> labels;
    for (int v = 0; v < prism.vertex_count(); ++v)
        labels.push_back(d.labelling.at(TupleSpace::prism_index(v)));
    Labelling plab{labels};
    BigradedElement mc(prism, plab);
    int amp = d.labelling.spread();
    for (int L = 1; L <= amp + 2; ++L)
        for (const Tuple& t : prism.tuples(L)) {
            Tuple image;
            for (int v : t) image.push_back(TupleSpace::prism_index(v));
            GradedMap label = resolve_component(d.mc, image, 1 - L);
            if (!label.is_zero()) mc.set_component(t, 1 - L, label);
        }
    return TwistPathData{d.cover, prism, plab, mc};
}

Report validate_path(const TwistPathData& p) {
    Report rep = is_mc(p.mc);
    // Vertical edges are quasi-isomorphisms (and so are the endpoint edges,
    // checked through the endpoints).
    for (int a = 0; a < p.cover.space.vertex_count(); ++a) {
        Tuple vert{TupleSpace::prism_vertex(a, 0), TupleSpace::prism_vertex(a, 1)};
        if (!p.prism.allowed(vert)) continue;
        GradedMap lam = p.mc.component(vert, 0);
        if (!is_quasi_iso(lam))
            rep.add({"vertical-not-quasi-iso", to_string(vert), 1, 0, 0, false, ""});
    }
    for (int row = 0; row <= 1; ++row) {
        Report sub = validate_twisting_cochain(path_endpoint(p, row));
        for (Record r : sub.records) {
            if (r.condition == "mc-residual") continue; // already covered by the prism check
            r.where = "row " + std::to_string(row) + " " + r.where;
            rep.add(std::move(r));
        }
    }
    return rep;
}

namespace {

/// Component of the prism element at the grid path over the base tuple.
GradedMap prism_label(const TwistPathData& p, const Tuple& base_tuple, const PrismSimplex& s) {
    Tuple t;
    for (auto [i, j] : s.path) t.push_back(TupleSpace::prism_vertex(base_tuple[i], j));
    return resolve_component(p.mc, t, 2 - int(t.size()));
}

} // namespace

WeakEquivalenceData path_to_weq(const TwistPathData& p) {
    Report ok = validate_path(p);
    if (!ok.ok()) throw Error("refused", "path fails validation");
    WeakEquivalenceData w{path_endpoint(p, 0), path_endpoint(p, 1), {}};
    Field fld = p.labelling.field();
    int amp = p.labelling.spread();
    const TupleSpace& base = p.cover.space;
    for (int pp = 0; pp <= amp + 2 && pp < 64; ++pp) {
        for (const Tuple& t : base.tuples(pp)) {
            GradedMap lam(w.f.labelling.at(t.back()), w.e.labelling.at(t.front()), -pp);
            for (int m = 0; m <= pp; ++m) {
                std::vector<std::pair<int, int>> path;
                for (int i = 0; i <= m; ++i) path.emplace_back(i, 0);
                for (int i = m; i <= pp; ++i) path.emplace_back(i, 1);
                lam = lam + prism_label(p, t, PrismSimplex(path)).scaled(
                                Scalar::of(pow_sign(m), fld));
            }
            if (!lam.is_zero()) w.lambda.emplace(t, lam);
        }
    }
    return w;
}

namespace {

GradedMap weq_lambda(const WeakEquivalenceData& w, const Tuple& t) {
    int deg = -(int(t.size()) - 1);
    if (tuple_degenerate(t))
        return GradedMap(w.f.labelling.at(t.back()), w.e.labelling.at(t.front()), deg);
    auto it = w.lambda.find(t);
    if (it != w.lambda.end()) return it->second;
    return GradedMap(w.f.labelling.at(t.back()), w.e.labelling.at(t.front()), deg);
}

/// Twisting-cochain component with the differential as the singleton column
/// and forced values over degenerate tuples.
GradedMap cochain_component(const TwistingCochainData& d, const Tuple& t) {
    if (t.size() == 1) {
        const Complex& c = d.labelling.at(t[0]);
        GradedMap diff(c, c, 1);
        for (int n = c.lo(); n < c.hi(); ++n)
            if (!c.diff(n).is_zero()) diff.set_component(n, c.diff(n));
        return diff;
    }
    return resolve_component(d.mc, t, 2 - int(t.size()));
}

} // namespace

Report validate_weq(const WeakEquivalenceData& w) {
    Report rep;
    const TupleSpace& base = w.e.cover.space;
    Field fld = w.e.labelling.field();
    for (const auto& [t, lam] : w.lambda) {
        int pp = int(t.size()) - 1;
        if (lam.degree() != -pp || lam.source() != w.f.labelling.at(t.back()) ||
            lam.target() != w.e.labelling.at(t.front()))
            rep.add({"lambda-shape", to_string(t), pp, -pp, 0, false, ""});
    }
    if (!rep.ok()) return rep;
    for (const Tuple& v : base.tuples(0)) {
        GradedMap lam = weq_lambda(w, v);
        if (!is_quasi_iso(lam))
            rep.add({"diagonal-not-quasi-iso", to_string(v), 0, 0, 0, false, ""});
    }
    Labelling both{w.e.labelling.complexes};
    both.complexes.insert(both.complexes.end(), w.f.labelling.complexes.begin(),
                          w.f.labelling.complexes.end());
    int spread = both.spread();
    for (int pp = 1; pp <= spread + 3; ++pp) {
        for (const Tuple& t : base.tuples(pp)) {
            // δ̂λ + Eλ - λF at bidegree (pp, 1-pp).
            GradedMap res(w.f.labelling.at(t.back()), w.e.labelling.at(t.front()), 1 - pp);
            for (int j = 1; j <= pp - 1; ++j) {
                Tuple smaller = t;
                smaller.erase(smaller.begin() + j);
                res = res + weq_lambda(w, smaller).scaled(Scalar::of(pow_sign(j), fld));
            }
            for (int j = 0; j <= pp; ++j) {
                Tuple front(t.begin(), t.begin() + j + 1);
                Tuple back(t.begin() + j, t.end());
                GradedMap e_term = compose(cochain_component(w.e, front), weq_lambda(w, back))
                                       .scaled(Scalar::of(pow_sign(long(1 - j) * (pp - j)), fld));
                GradedMap f_term = compose(weq_lambda(w, front), cochain_component(w.f, back))
                                       .scaled(Scalar::of(pow_sign(long(-j) * (pp - j)), fld));
                res = res + e_term - f_term;
            }
            if (!res.is_zero())
                rep.add({"weq-residual", to_string(t), pp, 1 - pp, res.nnz(), false, ""});
        }
    }
    return rep;
}

} // namespace twistkit
