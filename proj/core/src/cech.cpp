#include "twistkit/cech.hpp"

#include <algorithm>

namespace twistkit {

namespace {

int pow_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

bool tuple_degenerate(const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

} // namespace

GradedMap BigradedElement::component(const Tuple& t, int q) const {
    auto it = comps_.find({t, q});
    if (it != comps_.end()) return it->second;
    return GradedMap(labelling_.at(t.back()), labelling_.at(t.front()), q);
}

void BigradedElement::set_component(const Tuple& t, int q, const GradedMap& f) {
    if (!space_.allowed(t))
        throw Error("invalid-input", "tuple " + to_string(t) + " is not a simplex of the space");
    if (f.degree() != q || f.source() != labelling_.at(t.back()) ||
        f.target() != labelling_.at(t.front()))
        throw Error("malformed-map", "component endpoints/degree mismatch at " + to_string(t));
    if (f.is_zero()) comps_.erase({t, q});
    else comps_.insert_or_assign(std::pair<Tuple, int>{t, q}, f);
}

std::vector<std::pair<int, int>> BigradedElement::bidegrees() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& [key, f] : comps_) seen.insert({int(key.first.size()) - 1, key.second});
    return {seen.begin(), seen.end()};
}

bool BigradedElement::compatible_with(const BigradedElement& o) const {
    return space_ == o.space_ && labelling_ == o.labelling_;
}

BigradedElement BigradedElement::operator+(const BigradedElement& o) const {
    if (!compatible_with(o)) throw Error("invalid-input", "bigraded addition context mismatch");
    BigradedElement r = *this;
    for (const auto& [key, f] : o.comps_)
        r.set_component(key.first, key.second, r.component(key.first, key.second) + f);
    return r;
}

BigradedElement BigradedElement::operator-(const BigradedElement& o) const {
    return *this + o.scaled(Scalar::of(-1, labelling_.field()));
}

BigradedElement BigradedElement::scaled(const Scalar& s) const {
    BigradedElement r(space_, labelling_);
    if (s.is_zero()) return r;
    for (const auto& [key, f] : comps_) r.set_component(key.first, key.second, f.scaled(s));
    return r;
}

GradedMap resolve_component(const BigradedElement& e, const Tuple& t, int q) {
    if (t.size() < 2) throw Error("invalid-input", "resolve needs a tuple of length >= 2");
    if (!tuple_degenerate(t)) return e.component(t, q);
    const Complex& src = e.labelling().at(t.back());
    const Complex& tgt = e.labelling().at(t.front());
    if (t.size() == 2 && q == 0) return GradedMap::identity(src);
    return GradedMap(src, tgt, q);
}

BigradedElement deleted_cech_diff(const BigradedElement& f) {
    BigradedElement out(f.space(), f.labelling());
    Field fld = f.labelling().field();
    std::set<std::pair<int, int>> targets;
    for (auto [p, q] : f.bidegrees()) targets.insert({p + 1, q});
    for (auto [pp, q] : targets) {
        for (const Tuple& big : f.space().all_tuples(pp)) {
            GradedMap acc(f.labelling().at(big.back()), f.labelling().at(big.front()), q);
            for (int i = 1; i <= pp - 1; ++i) {
                Tuple smaller = big;
                smaller.erase(smaller.begin() + i);
                acc = acc + f.component(smaller, q).scaled(Scalar::of(pow_sign(i), fld));
            }
            if (!acc.is_zero()) out.set_component(big, q, acc);
        }
    }
    return out;
}

BigradedElement internal_diff(const BigradedElement& f) {
    BigradedElement out(f.space(), f.labelling());
    Field fld = f.labelling().field();
    for (const auto& [key, comp] : f.components()) {
        int q = key.second;
        GradedMap d = hom_differential(comp).scaled(Scalar::of(pow_sign(q + 1), fld));
        if (!d.is_zero())
            out.set_component(key.first, q + 1, out.component(key.first, q + 1) + d);
    }
    return out;
}

BigradedElement cup(const BigradedElement& f, const BigradedElement& g) {
    if (!f.compatible_with(g)) throw Error("invalid-input", "cup context mismatch");
    BigradedElement out(f.space(), f.labelling());
    Field fld = f.labelling().field();
    for (auto [p, qf] : f.bidegrees())
        for (auto [r, qg] : g.bidegrees()) {
            Scalar sgn = Scalar::of(pow_sign(long(qf) * r), fld);
            for (const Tuple& m : f.space().all_tuples(p + r)) {
                Tuple front(m.begin(), m.begin() + p + 1);
                Tuple back(m.begin() + p, m.end());
                GradedMap a = f.component(front, qf);
                if (a.is_zero()) continue;
                GradedMap b = g.component(back, qg);
                if (b.is_zero()) continue;
                GradedMap term = compose(a, b).scaled(sgn);
                if (!term.is_zero())
                    out.set_component(m, qf + qg, out.component(m, qf + qg) + term);
            }
        }
    return out;
}

BigradedElement total_diff(const BigradedElement& f) {
    BigradedElement out = deleted_cech_diff(f);
    Field fld = f.labelling().field();
    BigradedElement internal = internal_diff(f);
    for (const auto& [key, comp] : internal.components()) {
        int p = int(key.first.size()) - 1;
        GradedMap signed_comp = comp.scaled(Scalar::of(pow_sign(p), fld));
        out.set_component(key.first, key.second,
                          out.component(key.first, key.second) + signed_comp);
    }
    return out;
}

BigradedElement mc_residual(const BigradedElement& f) {
    // Twisting data keeps only nondegenerate components; the values over
    // degenerate simplices are forced, and for the Maurer-Cartan equation the
    // forced degenerate edges are identities.  Materialize them, then apply
    // the all-tuples operators.
    BigradedElement normalized = f;
    for (const Tuple& v : f.space().tuples(0)) {
        Tuple edge{v[0], v[0]};
        if (f.space().allowed(edge))
            normalized.set_component(edge, 0, GradedMap::identity(f.labelling().at(v[0])));
    }
    return total_diff(normalized) + cup(normalized, normalized);
}

BigradedElement augmented_mc(const BigradedElement& f) {
    BigradedElement aug = f;
    for (const Tuple& v : f.space().tuples(0)) {
        const Complex& c = f.labelling().at(v[0]);
        GradedMap d(c, c, 1);
        for (int n = c.lo(); n < c.hi(); ++n)
            if (!c.diff(n).is_zero()) d.set_component(n, c.diff(n));
        if (!d.is_zero()) aug.set_component(v, 1, d);
        Tuple edge{v[0], v[0]};
        if (f.space().allowed(edge))
            aug.set_component(edge, 0, GradedMap::identity(c));
    }
    return aug;
}

BigradedElement diagonal_identity(const TupleSpace& space, const Labelling& labelling) {
    BigradedElement d(space, labelling);
    for (const Tuple& v : space.tuples(0))
        d.set_component(v, 0, GradedMap::identity(labelling.at(v[0])));
    return d;
}

BigradedElement cup_inverse(const BigradedElement& lambda) {
    const TupleSpace& space = lambda.space();
    const Labelling& lab = lambda.labelling();
    BigradedElement diag = diagonal_identity(space, lab);
    for (const Tuple& v : space.tuples(0))
        if (!(lambda.component(v, 0) == diag.component(v, 0)))
            throw Error("not-invertible", "cup inverse needs an identity diagonal");
    BigradedElement n = lambda - diag;
    BigradedElement inv = diag;
    BigradedElement power = diag;
    Field fld = lab.field();
    for (int k = 1; k <= 2 * (lab.amplitude() + 2); ++k) {
        power = cup(power, n);
        if (power.is_zero()) break;
        inv = inv + power.scaled(Scalar::of(k % 2 ? -1 : 1, fld));
    }
    return inv;
}

BigradedElement transport_mc(const BigradedElement& f, const BigradedElement& lambda) {
    BigradedElement faug = augmented_mc(f);
    BigradedElement rhs = deleted_cech_diff(lambda) + cup(faug, lambda);
    BigradedElement g = cup(cup_inverse(lambda), rhs);
    // Strip back to twisting shape: nondegenerate tuples, bidegrees (p, 1-p)
    // with p >= 1.  The stripped entries must be exactly the forced values.
    BigradedElement out(f.space(), f.labelling());
    for (const auto& [key, comp] : g.components()) {
        const Tuple& t = key.first;
        int p = int(t.size()) - 1;
        if (p == 0) {
            // Diagonal column: must reproduce the differentials.
            const Complex& c = f.labelling().at(t[0]);
            GradedMap d(c, c, 1);
            for (int n = c.lo(); n < c.hi(); ++n)
                if (!c.diff(n).is_zero()) d.set_component(n, c.diff(n));
            if (!(comp == d))
                throw Error("infeasible", "transport does not preserve the differentials");
            continue;
        }
        if (key.second != 1 - p)
            throw Error("infeasible", "transport left the twisting bidegrees");
        if (tuple_degenerate(t)) {
            GradedMap forced = resolve_component(out, t, key.second);
            if (!(comp == forced))
                throw Error("infeasible", "transport breaks the degenerate normalization");
            continue;
        }
        out.set_component(t, key.second, comp);
    }
    return out;
}

BigradedElement intertwine_residual(const BigradedElement& e_mc, const BigradedElement& f_mc,
                                    const BigradedElement& lambda) {
    return deleted_cech_diff(lambda) + cup(augmented_mc(e_mc), lambda) -
           cup(lambda, augmented_mc(f_mc));
}

Report is_mc(const BigradedElement& f) {
    for (auto [p, q] : f.bidegrees())
        if (p < 1 || q != 1 - p)
            throw Error("shape-error", "Maurer-Cartan element needs bidegrees (p, 1-p), p >= 1");
    for (const auto& [key, comp] : f.components())
        if (tuple_degenerate(key.first))
            throw Error("shape-error", "twisting data stores nondegenerate tuples only");
    BigradedElement residual = mc_residual(f);
    Report rep;
    for (const auto& [key, comp] : residual.components())
        rep.add({"mc-residual", to_string(key.first), int(key.first.size()) - 1, key.second,
                 comp.nnz(), false, ""});
    return rep;
}

SpineExtension extend_spine(const TupleSpace& space, const Labelling& labelling,
                            const std::map<Tuple, GradedMap>& maps, int max_dim,
                            bool validate) {
    BigradedElement store(space, labelling);
    for (const auto& [t, f] : maps) {
        if (t.size() < 2) throw Error("invalid-input", "spine labels start at 1-simplices");
        store.set_component(t, 2 - int(t.size()), f);
    }
    SpineExtension out;
    for (int p = 0; p <= max_dim; ++p) {
        for (const Tuple& t : space.tuples(p)) {
            DgSimplex s;
            for (int v : t) s.objects.push_back(labelling.at(v));
            for (int k = 1; k <= p; ++k)
                for (const Face& face : enumerate_faces(p, k)) {
                    Tuple sub;
                    for (int idx : face.vertices) sub.push_back(t[idx]);
                    s.morphisms.emplace(face.vertices,
                                        resolve_component(store, sub, 2 - int(sub.size())));
                }
            if (validate) {
                Report r = validate_dg_simplex(s);
                for (Record rec : r.records) {
                    rec.where = to_string(t) + " " + rec.where;
                    out.report.add(std::move(rec));
                }
            }
            out.family.emplace(t, std::move(s));
        }
    }
    return out;
}

SimplexFamily mc_to_labelling(const BigradedElement& f, int max_dim) {
    Report mc = is_mc(f);
    if (!mc.ok()) {
        std::string detail;
        for (const auto& r : mc.records) detail += r.where + " ";
        throw Error("conversion-refused", "element is not Maurer-Cartan at " + detail);
    }
    if (max_dim < 0) {
        max_dim = f.labelling().spread() + 1;
        if (f.space().increasing_only()) max_dim = std::min(max_dim, f.space().vertex_count() - 1);
        max_dim = std::max(max_dim, 1);
    }
    std::map<Tuple, GradedMap> maps;
    for (const auto& [key, comp] : f.components()) maps.emplace(key.first, comp);
    // The Maurer-Cartan residuals already certify every face relation of
    // every family member, so the extension skips re-validation.
    SpineExtension ext = extend_spine(f.space(), f.labelling(), maps, max_dim, false);
    return ext.family;
}

BigradedElement labelling_to_mc(const TupleSpace& space, const Labelling& labelling,
                                const SimplexFamily& family) {
    BigradedElement out(space, labelling);
    int max_dim = 0;
    for (const auto& [t, s] : family) {
        if (!space.valid(t)) throw Error("invalid-input", "family tuple not in space");
        if (s.dim() != int(t.size()) - 1)
            throw Error("invalid-input", "family simplex dimension mismatch");
        max_dim = std::max(max_dim, s.dim());
        if (t.size() >= 2) {
            std::vector<int> top(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) top[i] = int(i);
            out.set_component(t, 2 - int(t.size()), s.label(top));
        }
    }
    // Functoriality: every stored simplex must agree with the extension of
    // the collected top labels.
    std::map<Tuple, GradedMap> maps;
    for (const auto& [key, comp] : out.components()) maps.emplace(key.first, comp);
    SpineExtension ext = extend_spine(space, labelling, maps, max_dim, false);
    for (const auto& [t, s] : family) {
        auto it = ext.family.find(t);
        if (it == ext.family.end() || !(it->second == s))
            throw Error("invalid-input",
                        "family is not functorial under face maps at " + to_string(t));
    }
    return out;
}

} // namespace twistkit
