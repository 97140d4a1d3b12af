#include "twistkit/gtt.hpp"

#include <algorithm>

namespace twistkit {

namespace {

std::string fkey(const std::vector<int>& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

std::string ckey(const std::vector<int>& tau, const std::vector<int>& sigma) {
    return "(" + fkey(tau) + "," + fkey(sigma) + ")";
}

int local_index(const std::vector<int>& sigma, int j) {
    auto it = std::lower_bound(sigma.begin(), sigma.end(), j);
    if (it == sigma.end() || *it != j)
        throw Error("invalid-index", "vertex " + std::to_string(j) + " not in " + fkey(sigma));
    return int(it - sigma.begin());
}

/// All nonempty subsets of {0..p} as sorted vertex lists, by size then lex.
std::vector<std::vector<int>> all_subsets(int p) {
    std::vector<std::vector<int>> out;
    for (const Face& f : all_faces(p)) out.push_back(f.vertices);
    return out;
}

bool strict_subset(const std::vector<int>& tau, const std::vector<int>& sigma) {
    return tau.size() < sigma.size() &&
           std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end());
}

CellLabel zero_cell_label(const Complex& base, Field f) {
    Complex zero = Complex::zero(f);
    GradedMap id = GradedMap::identity(base);
    return CellLabel{ElementaryDecl{}, zero, Trivialisation{id, id}};
}

/// Sum of incl_ti ∘ g ∘ proj_si over the given blocks.
GradedMap assemble(const SumLayout& tgt, const SumLayout& src,
                   const std::vector<std::tuple<int, int, GradedMap>>& blocks, int degree = 0) {
    GradedMap out(src.total, tgt.total, degree);
    for (const auto& [ti, si, g] : blocks)
        out = out + compose(sum_inclusion(tgt, ti), compose(g, sum_projection(src, si)));
    return out;
}

GradedMap map_block(const GradedMap& f, const SumLayout& tgt, int ti, const SumLayout& src,
                    int si) {
    return compose(sum_projection(tgt, ti), compose(f, sum_inclusion(src, si)));
}

} // namespace

const DgSimplex& GTTLabelling::at(const std::vector<int>& sigma) const {
    auto it = vertex_labels.find(sigma);
    if (it == vertex_labels.end())
        throw Error("incomplete", "missing vertex label at " + fkey(sigma));
    return it->second;
}

const std::vector<CellLabel>& GTTLabelling::cell(const std::vector<int>& tau,
                                                 const std::vector<int>& sigma) const {
    auto it = cell_labels.find({tau, sigma});
    if (it == cell_labels.end())
        throw Error("incomplete", "missing cell label at " + ckey(tau, sigma));
    return it->second;
}

const Complex& GTTLabelling::complex_at(int j, const std::vector<int>& sigma) const {
    return at(sigma).objects[local_index(sigma, j)];
}

GradedMap GTTLabelling::phi(const std::vector<int>& j_global,
                            const std::vector<int>& sigma) const {
    std::vector<int> local;
    for (int j : j_global) local.push_back(local_index(sigma, j));
    return at(sigma).label(local);
}

Report validate_gtt(const GTTLabelling& l, bool strict_elementary) {
    Report rep;
    int p = l.dim;
    auto subsets = all_subsets(p);

    // Shape and condition (a) per 0-cell.
    for (const auto& sigma : subsets) {
        auto it = l.vertex_labels.find(sigma);
        if (it == l.vertex_labels.end()) {
            rep.add({"incomplete", fkey(sigma), 0, 0, 0, false, "missing vertex label"});
            continue;
        }
        if (it->second.dim() != int(sigma.size()) - 1) {
            rep.add({"shape", fkey(sigma), 0, 0, 0, false, "vertex label dimension mismatch"});
            continue;
        }
        Report sub = validate_dg_simplex(it->second);
        for (Record r : sub.records) {
            r.condition = "(a):" + r.condition;
            r.where = fkey(sigma) + " " + r.where;
            rep.add(std::move(r));
        }
    }
    if (!rep.ok()) return rep;

    for (const auto& sigma : subsets) {
        for (const auto& tau : subsets) {
            if (!strict_subset(tau, sigma)) continue;
            auto it = l.cell_labels.find({tau, sigma});
            if (it == l.cell_labels.end()) {
                rep.add({"incomplete", ckey(tau, sigma), 0, 0, 0, false, "missing cell label"});
                continue;
            }
            if (it->second.size() != tau.size()) {
                rep.add({"shape", ckey(tau, sigma), 0, 0, 0, false,
                         "one complement per vertex of tau required"});
                continue;
            }
            // Condition (i).
            for (std::size_t m = 0; m < tau.size(); ++m) {
                const CellLabel& cl = it->second[m];
                const Complex& small = l.complex_at(tau[m], tau);
                const Complex& big = l.complex_at(tau[m], sigma);
                if (!is_elementary(cl.complement, strict_elementary)) {
                    rep.add({"(i):complement-not-elementary",
                             ckey(tau, sigma) + " vertex " + std::to_string(tau[m]), 0, 0, 0,
                             false, ""});
                    continue;
                }
                Complex sum = direct_sum({small, cl.complement});
                const GradedMap& th = cl.triv.theta;
                if (th.degree() != 0 || th.source() != sum || th.target() != big) {
                    rep.add({"(i):trivialisation-shape",
                             ckey(tau, sigma) + " vertex " + std::to_string(tau[m]), 0, 0, 0,
                             false, ""});
                    continue;
                }
                GradedMap dth = hom_differential(th);
                if (!dth.is_zero())
                    rep.add({"(i):trivialisation-not-diagonal",
                             ckey(tau, sigma) + " vertex " + std::to_string(tau[m]), 0, 0,
                             dth.nnz(), false,
                             "theta does not intertwine the block-diagonal differential"});
                if (!(compose(th, cl.triv.theta_inv) == GradedMap::identity(big)) ||
                    !(compose(cl.triv.theta_inv, th) == GradedMap::identity(sum)))
                    rep.add({"(i):trivialisation-not-invertible",
                             ckey(tau, sigma) + " vertex " + std::to_string(tau[m]), 0, 0, 0,
                             false, ""});
            }
        }
    }
    if (!rep.ok()) return rep;

    // Condition (ii): block form of the tau-trivialised phi_K(sigma).
    for (const auto& sigma : subsets) {
        for (const auto& tau : subsets) {
            if (!strict_subset(tau, sigma)) continue;
            const auto& cls = l.cell(tau, sigma);
            for (int kk = 1; kk < int(tau.size()); ++kk)
                for (const Face& kf : enumerate_faces(int(tau.size()) - 1, kk)) {
                    std::vector<int> K;
                    for (int idx : kf.vertices) K.push_back(tau[idx]);
                    int first = local_index(tau, K.front());
                    int last = local_index(tau, K.back());
                    const CellLabel& cf = cls[first];
                    const CellLabel& cb = cls[last];
                    SumLayout src = direct_sum_layout(
                        {l.complex_at(K.back(), tau), cb.complement});
                    SumLayout tgt = direct_sum_layout(
                        {l.complex_at(K.front(), tau), cf.complement});
                    GradedMap trivialised = compose(
                        cf.triv.theta_inv, compose(l.phi(K, sigma), cb.triv.theta));
                    GradedMap tl = map_block(trivialised, tgt, 0, src, 0);
                    GradedMap bl = map_block(trivialised, tgt, 1, src, 0);
                    GradedMap br = map_block(trivialised, tgt, 1, src, 1);
                    GradedMap want_tl = l.phi(K, tau);
                    if (!(tl == want_tl))
                        rep.add({"(ii):diagonal-block", ckey(tau, sigma) + " K=" + fkey(K), 0, 0,
                                 (tl - want_tl).nnz(), false, ""});
                    if (!bl.is_zero())
                        rep.add({"(ii):lower-left-block", ckey(tau, sigma) + " K=" + fkey(K), 0,
                                 0, bl.nnz(), false, ""});
                    GradedMap want_br =
                        elementary_morphism(cb.decl, cf.decl, 2 - int(K.size()),
                                            cb.complement.field());
                    if (!(br == want_br))
                        rep.add({"(ii):complement-block", ckey(tau, sigma) + " K=" + fkey(K), 0,
                                 0, (br - want_br).nnz(), true,
                                 "complement block differs from the elementary morphism"});
                }
        }
    }
    return rep;
}

bool is_gtt1(const GTTLabelling& l) {
    for (const auto& [sigma, s] : l.vertex_labels)
        if (!is_ordinary_core(s)) return false;
    return true;
}

GTTLabelling gtt_face(const GTTLabelling& l, int i) {
    int p = l.dim;
    if (i < 0 || i > p) throw Error("invalid-index", "face index out of range");
    auto embed = [i](const std::vector<int>& f) {
        std::vector<int> out;
        for (int v : f) out.push_back(v >= i ? v + 1 : v);
        return out;
    };
    GTTLabelling out;
    out.dim = p - 1;
    for (const auto& sigma : all_subsets(p - 1)) {
        out.vertex_labels.emplace(sigma, l.at(embed(sigma)));
        for (const auto& tau : all_subsets(p - 1))
            if (strict_subset(tau, sigma))
                out.cell_labels.emplace(std::pair{tau, sigma}, l.cell(embed(tau), embed(sigma)));
    }
    return out;
}

GTTLabelling gtt_degeneracy(const GTTLabelling& l, int i) {
    int p = l.dim;
    if (i < 0 || i > p) throw Error("invalid-index", "degeneracy index out of range");
    auto collapse = [i](const std::vector<int>& f) {
        std::vector<int> out;
        for (int v : f) {
            int c = v <= i ? v : v - 1;
            if (out.empty() || out.back() != c) out.push_back(c);
        }
        return out;
    };
    GTTLabelling out;
    out.dim = p + 1;
    for (const auto& sigma : all_subsets(p + 1)) {
        std::vector<int> csigma = collapse(sigma);
        bool doubled = csigma.size() < sigma.size(); // contains both copies of i
        if (!doubled) {
            out.vertex_labels.emplace(sigma, l.at(csigma));
        } else {
            out.vertex_labels.emplace(
                sigma, dg_degeneracy(l.at(csigma), local_index(csigma, i)));
        }
    }
    for (const auto& sigma : all_subsets(p + 1))
        for (const auto& tau : all_subsets(p + 1)) {
            if (!strict_subset(tau, sigma)) continue;
            std::vector<int> ctau = collapse(tau), csigma = collapse(sigma);
            std::vector<CellLabel> labels;
            if (ctau == csigma) {
                // Purely degenerate direction: the two vertex labels share
                // their objects on the nose.
                for (int j : tau)
                    labels.push_back(
                        zero_cell_label(out.complex_at(j, tau),
                                        out.at(tau).objects.front().field()));
            } else {
                const auto& old = l.cell(ctau, csigma);
                for (int j : tau) {
                    int cj = j <= i ? j : j - 1;
                    labels.push_back(old[local_index(ctau, cj)]);
                }
            }
            out.cell_labels.emplace(std::pair{tau, sigma}, std::move(labels));
        }
    return out;
}

GTTLabelling include_twist(const DgSimplex& s) {
    if (!in_core(s)) throw Error("refused", "inclusion needs a core simplex");
    Field f = s.objects.front().field();
    int p = s.dim();
    GTTLabelling out;
    out.dim = p;
    for (const auto& sigma : all_subsets(p)) out.vertex_labels.emplace(sigma, sub_simplex(s, sigma));
    for (const auto& sigma : all_subsets(p))
        for (const auto& tau : all_subsets(p)) {
            if (!strict_subset(tau, sigma)) continue;
            std::vector<CellLabel> labels;
            for (int j : tau) labels.push_back(zero_cell_label(s.objects[j], f));
            out.cell_labels.emplace(std::pair{tau, sigma}, std::move(labels));
        }
    return out;
}

GTTLabelling include_green(const GTTLabelling& l) {
    if (!is_gtt1(l)) throw Error("refused", "not a GTT-1-labelling");
    return l;
}

namespace {

struct EdgeData {
    Complex c0, c1;      // endpoint complexes C_a(a), C_b(b)
    DgSimplex middle;    // vertex label at {a,b}
    GradedMap phi;       // C_b(ab) -> C_a(ab)
    CellLabel cl0, cl1;  // cells ({a},{ab}), ({b},{ab})
};

EdgeData edge_data(const GTTLabelling& e) {
    if (e.dim != 1) throw Error("horn-shape-error", "horn edges must be 1-dimensional");
    EdgeData d{e.complex_at(0, {0}), e.complex_at(1, {1}), e.at({0, 1}),
               e.phi({0, 1}, {0, 1}), e.cell({0}, {0, 1})[0], e.cell({1}, {0, 1})[0]};
    return d;
}

/// phi conjugated into the padded coordinates:
/// theta_tgt^{-1} ∘ phi ∘ theta_src.
GradedMap conjugated_edge(const EdgeData& e) {
    return compose(e.cl0.triv.theta_inv, compose(e.phi, e.cl1.triv.theta));
}

/// Trivialisation embedding `mid` (≅ base ⊕ own complement via theta) plus
/// one extra complement into a three-part layout; `mid_parts` names the two
/// slots of the layout receiving theta^{-1}'s image, `extra_part` the slot
/// of the extra complement.
CellLabel embedded_cell(const Complex& mid, const Trivialisation& mid_triv,
                        const ElementaryDecl& extra_decl, const Complex& extra,
                        const SumLayout& big, int mid_part0, int mid_part1, int extra_part) {
    SumLayout src = direct_sum_layout({mid, extra});
    SumLayout mid_pair = direct_sum_layout(
        {big.parts[mid_part0], big.parts[mid_part1]});
    GradedMap into_pair = mid_triv.theta_inv; // mid -> base ⊕ complement
    GradedMap theta =
        assemble(big, src,
                 {{mid_part0, 0, compose(sum_projection(mid_pair, 0), into_pair)},
                  {mid_part1, 0, compose(sum_projection(mid_pair, 1), into_pair)},
                  {extra_part, 1, GradedMap::identity(extra)}});
    return CellLabel{extra_decl, extra, Trivialisation{theta, theta.inverted()}};
}

GTTLabelling fill_horn2_impl(const GTTLabelling& edge_a, const GTTLabelling& edge_b,
                             int horn_index, bool green) {
    if (horn_index < 0 || horn_index > 2)
        throw Error("invalid-index", "horn index must be 0, 1 or 2");
    if (green && (!is_gtt1(edge_a) || !is_gtt1(edge_b)))
        throw Error("refused", "Green horn filling needs isomorphism edges");
    EdgeData a = edge_data(edge_a);
    EdgeData b = edge_data(edge_b);
    Field f = a.c0.field();

    // Shared-vertex requirement per horn index.
    const Complex *share_a = nullptr, *share_b = nullptr;
    if (horn_index == 0) { share_a = &a.c0; share_b = &b.c0; }
    if (horn_index == 1) { share_a = &a.c1; share_b = &b.c0; }
    if (horn_index == 2) { share_a = &a.c1; share_b = &b.c1; }
    if (!(*share_a == *share_b))
        throw Error("horn-shape-error", "edges do not agree on the shared vertex");

    // Padded vertex complexes of the central 2-simplex and the padded edge
    // maps; per case the three layouts list (base, own complement, opposite
    // complement).
    GradedMap pa = conjugated_edge(a);
    GradedMap pb = conjugated_edge(b);
    SumLayout pair_a0 = direct_sum_layout({a.c0, a.cl0.complement});
    SumLayout pair_a1 = direct_sum_layout({a.c1, a.cl1.complement});
    SumLayout pair_b0 = direct_sum_layout({b.c0, b.cl0.complement});
    SumLayout pair_b1 = direct_sum_layout({b.c1, b.cl1.complement});

    SumLayout l0{}, l1{}, l2{};
    GradedMap phi01(Complex::zero(f), Complex::zero(f), 0);
    GradedMap phi02 = phi01, phi12 = phi01;

    auto block = [&](const GradedMap& g, const SumLayout& tl, int ti, const SumLayout& sl,
                     int si) { return map_block(g, tl, ti, sl, si); };

    if (horn_index == 0) {
        // Edges {0,1} = a and {0,2} = b; construct {1,2}.
        l0 = direct_sum_layout({a.c0, a.cl0.complement, b.cl0.complement});
        l1 = direct_sum_layout({a.c1, a.cl1.complement, b.cl0.complement});
        l2 = direct_sum_layout({b.c1, b.cl1.complement, a.cl0.complement});
        phi01 = assemble(l0, l1,
                         {{0, 0, block(pa, pair_a0, 0, pair_a1, 0)},
                          {0, 1, block(pa, pair_a0, 0, pair_a1, 1)},
                          {1, 0, block(pa, pair_a0, 1, pair_a1, 0)},
                          {1, 1, block(pa, pair_a0, 1, pair_a1, 1)},
                          {2, 2, GradedMap::identity(b.cl0.complement)}});
        phi02 = assemble(l0, l2,
                         {{0, 0, block(pb, pair_b0, 0, pair_b1, 0)},
                          {0, 1, block(pb, pair_b0, 0, pair_b1, 1)},
                          {2, 0, block(pb, pair_b0, 1, pair_b1, 0)},
                          {2, 1, block(pb, pair_b0, 1, pair_b1, 1)},
                          {1, 2, GradedMap::identity(a.cl0.complement)}});
    } else if (horn_index == 1) {
        // Edges {0,1} = a and {1,2} = b; construct {0,2} by composition.
        l0 = direct_sum_layout({a.c0, a.cl0.complement, b.cl0.complement});
        l1 = direct_sum_layout({a.c1, a.cl1.complement, b.cl0.complement});
        l2 = direct_sum_layout({b.c1, b.cl1.complement, a.cl1.complement});
        phi01 = assemble(l0, l1,
                         {{0, 0, block(pa, pair_a0, 0, pair_a1, 0)},
                          {0, 1, block(pa, pair_a0, 0, pair_a1, 1)},
                          {1, 0, block(pa, pair_a0, 1, pair_a1, 0)},
                          {1, 1, block(pa, pair_a0, 1, pair_a1, 1)},
                          {2, 2, GradedMap::identity(b.cl0.complement)}});
        phi12 = assemble(l1, l2,
                         {{0, 0, block(pb, pair_b0, 0, pair_b1, 0)},
                          {0, 1, block(pb, pair_b0, 0, pair_b1, 1)},
                          {2, 0, block(pb, pair_b0, 1, pair_b1, 0)},
                          {2, 1, block(pb, pair_b0, 1, pair_b1, 1)},
                          {1, 2, GradedMap::identity(a.cl1.complement)}});
    } else {
        // Edges {0,2} = a and {1,2} = b; construct {0,1}.
        l0 = direct_sum_layout({a.c0, a.cl0.complement, b.cl1.complement});
        l1 = direct_sum_layout({b.c0, b.cl0.complement, a.cl1.complement});
        l2 = direct_sum_layout({a.c1, a.cl1.complement, b.cl1.complement});
        phi02 = assemble(l0, l2,
                         {{0, 0, block(pa, pair_a0, 0, pair_a1, 0)},
                          {0, 1, block(pa, pair_a0, 0, pair_a1, 1)},
                          {1, 0, block(pa, pair_a0, 1, pair_a1, 0)},
                          {1, 1, block(pa, pair_a0, 1, pair_a1, 1)},
                          {2, 2, GradedMap::identity(b.cl1.complement)}});
        phi12 = assemble(l1, l2,
                         {{0, 0, block(pb, pair_b0, 0, pair_b1, 0)},
                          {0, 2, block(pb, pair_b0, 0, pair_b1, 1)},
                          {1, 0, block(pb, pair_b0, 1, pair_b1, 0)},
                          {1, 2, block(pb, pair_b0, 1, pair_b1, 1)},
                          {2, 1, GradedMap::identity(a.cl1.complement)}});
    }

    // Missing edge and homotopy.
    GradedMap hom012(l2.total, l0.total, -1);
    if (horn_index == 0) {
        if (green) {
            phi12 = compose(phi01.inverted(), phi02);
        } else {
            WhiteheadInverse w = whitehead_inverse(phi01);
            phi12 = compose(w.g, phi02);
            hom012 = -compose(w.hA, phi02);
        }
    } else if (horn_index == 1) {
        phi02 = compose(phi01, phi12);
    } else {
        if (green) {
            phi01 = compose(phi02, phi12.inverted());
        } else {
            WhiteheadInverse w = whitehead_inverse(phi12);
            phi01 = compose(phi02, w.g);
            hom012 = -compose(phi02, w.hB);
        }
    }

    DgSimplex central{{l0.total, l1.total, l2.total}, {}};
    central.morphisms.emplace(std::vector<int>{0, 1}, phi01);
    central.morphisms.emplace(std::vector<int>{0, 2}, phi02);
    central.morphisms.emplace(std::vector<int>{1, 2}, phi12);
    central.morphisms.emplace(std::vector<int>{0, 1, 2}, hom012);

    // Assemble the labelling.  Positions of the given edges per horn index.
    std::vector<int> ea_pos, eb_pos, new_pos;
    if (horn_index == 0) { ea_pos = {0, 1}; eb_pos = {0, 2}; new_pos = {1, 2}; }
    if (horn_index == 1) { ea_pos = {0, 1}; eb_pos = {1, 2}; new_pos = {0, 2}; }
    if (horn_index == 2) { ea_pos = {0, 2}; eb_pos = {1, 2}; new_pos = {0, 1}; }

    GTTLabelling out;
    out.dim = 2;
    // Endpoint vertices.
    std::map<int, Complex> corner;
    corner[ea_pos[0]] = a.c0;
    corner[ea_pos[1]] = a.c1;
    corner[eb_pos[0]] = b.c0;
    corner[eb_pos[1]] = b.c1;
    for (int v = 0; v <= 2; ++v) out.vertex_labels.emplace(std::vector<int>{v},
                                                           dg_point(corner[v]));
    out.vertex_labels.emplace(ea_pos, a.middle);
    out.vertex_labels.emplace(eb_pos, b.middle);
    {
        const SumLayout& ls = (new_pos == std::vector<int>{1, 2}) ? l1
                              : (new_pos == std::vector<int>{0, 2}) ? l0
                                                                    : l0;
        const SumLayout& lt = (new_pos == std::vector<int>{1, 2}) ? l2
                              : (new_pos == std::vector<int>{0, 2}) ? l2
                                                                    : l1;
        GradedMap edge = (new_pos == std::vector<int>{1, 2}) ? phi12
                         : (new_pos == std::vector<int>{0, 2}) ? phi02
                                                               : phi01;
        DgSimplex ne{{ls.total, lt.total}, {}};
        ne.morphisms.emplace(std::vector<int>{0, 1}, edge);
        out.vertex_labels.emplace(new_pos, ne);
    }
    out.vertex_labels.emplace(std::vector<int>{0, 1, 2}, central);

    // Cells of the given edges are preserved bit-exactly.
    out.cell_labels.emplace(std::pair{std::vector<int>{ea_pos[0]}, ea_pos},
                            std::vector<CellLabel>{a.cl0});
    out.cell_labels.emplace(std::pair{std::vector<int>{ea_pos[1]}, ea_pos},
                            std::vector<CellLabel>{a.cl1});
    out.cell_labels.emplace(std::pair{std::vector<int>{eb_pos[0]}, eb_pos},
                            std::vector<CellLabel>{b.cl0});
    out.cell_labels.emplace(std::pair{std::vector<int>{eb_pos[1]}, eb_pos},
                            std::vector<CellLabel>{b.cl1});

    // Cells of the new edge: literal direct-sum padding, identity theta.
    auto literal_cell = [&](const SumLayout& lay, const ElementaryDecl& d1,
                            const ElementaryDecl& d2) {
        ElementaryDecl decl;
        decl.summands.insert(decl.summands.end(), d1.summands.begin(), d1.summands.end());
        decl.summands.insert(decl.summands.end(), d2.summands.begin(), d2.summands.end());
        Complex complement = direct_sum({lay.parts[1], lay.parts[2]});
        GradedMap id = GradedMap::identity(lay.total);
        return CellLabel{std::move(decl), std::move(complement), Trivialisation{id, id}};
    };

    // Which layout sits at which vertex, and the complement declarations of
    // its two padding slots.
    struct Slot {
        const SumLayout* lay;
        ElementaryDecl d1, d2;
    };
    std::map<int, Slot> slots;
    if (horn_index == 0) {
        slots[0] = {&l0, a.cl0.decl, b.cl0.decl};
        slots[1] = {&l1, a.cl1.decl, b.cl0.decl};
        slots[2] = {&l2, b.cl1.decl, a.cl0.decl};
    } else if (horn_index == 1) {
        slots[0] = {&l0, a.cl0.decl, b.cl0.decl};
        slots[1] = {&l1, a.cl1.decl, b.cl0.decl};
        slots[2] = {&l2, b.cl1.decl, a.cl1.decl};
    } else {
        slots[0] = {&l0, a.cl0.decl, b.cl1.decl};
        slots[1] = {&l1, b.cl0.decl, a.cl1.decl};
        slots[2] = {&l2, a.cl1.decl, b.cl1.decl};
    }

    // New edge cells: its endpoint complexes are the padded totals on the
    // nose, so both complements are the literal two padding slots.
    out.cell_labels.emplace(
        std::pair{std::vector<int>{new_pos[0]}, new_pos},
        std::vector<CellLabel>{literal_cell(*slots[new_pos[0]].lay, slots[new_pos[0]].d1,
                                            slots[new_pos[0]].d2)});
    out.cell_labels.emplace(
        std::pair{std::vector<int>{new_pos[1]}, new_pos},
        std::vector<CellLabel>{literal_cell(*slots[new_pos[1]].lay, slots[new_pos[1]].d1,
                                            slots[new_pos[1]].d2)});

    // Vertex-into-centre cells.
    for (int v = 0; v <= 2; ++v)
        out.cell_labels.emplace(
            std::pair{std::vector<int>{v}, std::vector<int>{0, 1, 2}},
            std::vector<CellLabel>{literal_cell(*slots[v].lay, slots[v].d1, slots[v].d2)});

    // Edge-into-centre cells.  Each end of a given edge embeds through its
    // own trivialisation into (base slot, own-complement slot); the opposite
    // complement is the remaining slot.  The own complement of edge b at the
    // shared vertex sits in slot 2 of that layout, so its embedding uses
    // slots (0,2) with extra slot 1.
    auto edge_into_centre = [&](const std::vector<int>& pos, const EdgeData& e,
                                bool shared_end_flipped, int flipped_which) {
        std::vector<CellLabel> cells;
        for (int which = 0; which < 2; ++which) {
            int v = pos[which];
            const Slot& sl = slots[v];
            const CellLabel& own = which == 0 ? e.cl0 : e.cl1;
            const Complex& mid = which == 0 ? e.phi.target() : e.phi.source();
            bool flipped = shared_end_flipped && which == flipped_which;
            int mid1 = flipped ? 2 : 1;
            int extra = flipped ? 1 : 2;
            const ElementaryDecl& extra_decl = extra == 1 ? sl.d1 : sl.d2;
            cells.push_back(embedded_cell(mid, own.triv, extra_decl, sl.lay->parts[extra],
                                          *sl.lay, 0, mid1, extra));
        }
        return cells;
    };
    // Edge a always embeds into slots (0,1); edge b's end at the slot-shared
    // layout embeds into (0,2).
    if (horn_index == 0) {
        out.cell_labels.emplace(std::pair{ea_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(ea_pos, a, false, 0));
        out.cell_labels.emplace(std::pair{eb_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(eb_pos, b, true, 0));
    } else if (horn_index == 1) {
        out.cell_labels.emplace(std::pair{ea_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(ea_pos, a, false, 0));
        out.cell_labels.emplace(std::pair{eb_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(eb_pos, b, true, 0));
    } else {
        out.cell_labels.emplace(std::pair{ea_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(ea_pos, a, false, 0));
        out.cell_labels.emplace(std::pair{eb_pos, std::vector<int>{0, 1, 2}},
                                edge_into_centre(eb_pos, b, true, 1));
    }
    {
        // New edge into the centre: zero complements, identity inclusions.
        std::vector<CellLabel> cells;
        cells.push_back(zero_cell_label(slots[new_pos[0]].lay->total, f));
        cells.push_back(zero_cell_label(slots[new_pos[1]].lay->total, f));
        out.cell_labels.emplace(std::pair{new_pos, std::vector<int>{0, 1, 2}},
                                std::move(cells));
    }
    return out;
}

} // namespace

GTTLabelling fill_horn2(const GTTLabelling& edge_a, const GTTLabelling& edge_b,
                        int horn_index) {
    return fill_horn2_impl(edge_a, edge_b, horn_index, false);
}

GTTLabelling fill_horn2_green(const GTTLabelling& edge_a, const GTTLabelling& edge_b,
                              int horn_index) {
    return fill_horn2_impl(edge_a, edge_b, horn_index, true);
}

Strictified strictify(const GradedMap& f) {
    if (f.degree() != 0 || !is_quasi_iso(f))
        throw Error("refused", "strictification needs a quasi-isomorphism");
    const Complex& b = f.source();
    const Complex& a = f.target();
    Field fld = a.field();

    bool injective = true;
    for (int n = b.lo(); n <= b.hi() && injective; ++n)
        if (f.component(n).rank() != b.dim(n)) injective = false;

    Strictified out{a, b, f, {}, {}, {}, {}, {}};

    if (injective) {
        // Cokernel coordinates: extend the image columns to a basis.
        std::map<int, Matrix> wcols;
        std::map<int, Matrix> pinv; // inverse of (image | complement)
        std::vector<int> qdims;
        int lo = a.lo(), hi = a.hi();
        for (int n = lo; n <= hi; ++n) {
            Matrix img = f.component(n);
            Matrix probe(a.dim(n), img.cols(), fld);
            probe.set_block(0, 0, img);
            int have = probe.rank();
            std::vector<int> chosen;
            for (int k = 0; k < a.dim(n) && have < a.dim(n); ++k) {
                Matrix bigger(a.dim(n), probe.cols() + 1, fld);
                bigger.set_block(0, 0, probe);
                bigger.at(k, probe.cols()) = Scalar::one(fld);
                if (bigger.rank() > have) {
                    probe = bigger;
                    ++have;
                    chosen.push_back(k);
                }
            }
            Matrix w(a.dim(n), int(chosen.size()), fld);
            for (int j = 0; j < int(chosen.size()); ++j)
                w.at(chosen[j], j) = Scalar::one(fld);
            wcols[n] = w;
            qdims.push_back(int(chosen.size()));
            Matrix p(a.dim(n), a.dim(n), fld);
            p.set_block(0, 0, img);
            p.set_block(0, img.cols(), w);
            pinv[n] = *p.inverse();
        }
        // Quotient complex in the complement coordinates.
        std::vector<Matrix> qdiffs;
        for (int n = lo; n < hi; ++n) {
            Matrix coords = pinv[n + 1] * (a.diff(n) * wcols[n]);
            qdiffs.push_back(coords.block(b.dim(n + 1), 0, qdims[n + 1 - lo], qdims[n - lo]));
        }
        Complex q(fld, lo, qdims, qdiffs);
        SplitAcyclic sq = split_acyclic(q);
        Complex eb = sq.iso.source();
        // Degreewise lift of the splitting, corrected to a chain map using
        // the contraction of the elementary model.
        GradedMap j0(eb, a, 0);
        for (int n = lo; n <= hi; ++n) {
            Matrix m = wcols[n] * sq.iso.component(n);
            if (!m.is_zero()) j0.set_component(n, m);
        }
        GradedMap h = elementary_contraction(sq.decl, fld);
        GradedMap j(eb, a, 0);
        {
            // d_A ∘ j0 ∘ h + j0 ∘ h ∘ d_E, written with the hom-differential
            // of the contraction to stay exact.
            GradedMap da(a, a, 1);
            for (int n = a.lo(); n < a.hi(); ++n)
                if (!a.diff(n).is_zero()) da.set_component(n, a.diff(n));
            GradedMap de(eb, eb, 1);
            for (int n = eb.lo(); n < eb.hi(); ++n)
                if (!eb.diff(n).is_zero()) de.set_component(n, eb.diff(n));
            j = compose(da, compose(j0, h)) + compose(j0, compose(h, de));
        }
        out.layout_b = direct_sum_layout({b, eb});
        out.layout_a = direct_sum_layout({a, Complex::zero(fld)});
        out.decl_b = sq.decl;
        out.b_tilde = out.layout_b.total;
        out.a_tilde = a;
        out.f_tilde = compose(f, sum_projection(out.layout_b, 0)) +
                      compose(j, sum_projection(out.layout_b, 1));
    } else {
        // Make the map surjective by adjoining spans of A mapped by (id, d).
        ElementaryDecl pad;
        for (int n = a.lo(); n <= a.hi(); ++n)
            if (a.dim(n) > 0) pad.summands.emplace_back(a.dim(n), n);
        Complex ebpad = build_elementary(pad, fld);
        GradedMap u(ebpad, a, 0);
        if (!pad.summands.empty()) {
            SumLayout lay = direct_sum_layout([&] {
                std::vector<Complex> parts;
                for (auto [d, place] : pad.summands)
                    parts.push_back(build_elementary(ElementaryDecl{{{d, place}}}, fld));
                return parts;
            }());
            GradedMap acc(ebpad, a, 0);
            for (std::size_t s = 0; s < pad.summands.size(); ++s) {
                auto [d, place] = pad.summands[s];
                Complex span = lay.parts[s];
                GradedMap piece(span, a, 0);
                piece.set_component(place, Matrix::identity(d, fld));
                if (a.dim(place + 1) > 0 && !a.diff(place).is_zero())
                    piece.set_component(place + 1, a.diff(place));
                acc = acc + compose(piece, sum_projection(lay, int(s)));
            }
            u = acc;
        }
        SumLayout lb = direct_sum_layout({b, ebpad});
        GradedMap f0 = compose(f, sum_projection(lb, 0)) + compose(u, sum_projection(lb, 1));

        // Kernel subcomplex with explicit basis.
        const Complex& bt = lb.total;
        std::map<int, Matrix> iota;
        std::vector<int> kdims;
        for (int n = bt.lo(); n <= bt.hi(); ++n) {
            iota[n] = f0.component(n).kernel_basis();
            kdims.push_back(iota[n].cols());
        }
        std::vector<Matrix> kdiffs;
        for (int n = bt.lo(); n < bt.hi(); ++n) {
            auto sol = iota[n + 1].solve(bt.diff(n) * iota[n]);
            if (!sol) throw Error("refused", "kernel is not a subcomplex");
            kdiffs.push_back(*sol);
        }
        Complex kc(fld, bt.lo(), kdims, kdiffs);
        SplitAcyclic sk = split_acyclic(kc);
        GradedMap iota_map(kc, bt, 0);
        for (int n = kc.lo(); n <= kc.hi(); ++n)
            if (!iota[n].is_zero()) iota_map.set_component(n, iota[n]);

        // Degreewise section, corrected to a chain section via the
        // contraction of the kernel.
        GradedMap t(a, bt, 0);
        for (int n = a.lo(); n <= a.hi(); ++n) {
            if (a.dim(n) == 0) continue;
            auto sol = f0.component(n).solve(Matrix::identity(a.dim(n), fld));
            if (!sol) throw Error("refused", "padded map is not surjective");
            if (!sol->is_zero()) t.set_component(n, *sol);
        }
        GradedMap defect = [&] {
            GradedMap da(a, a, 1), dbt(bt, bt, 1);
            for (int n = a.lo(); n < a.hi(); ++n)
                if (!a.diff(n).is_zero()) da.set_component(n, a.diff(n));
            for (int n = bt.lo(); n < bt.hi(); ++n)
                if (!bt.diff(n).is_zero()) dbt.set_component(n, bt.diff(n));
            return compose(dbt, t) - compose(t, da);
        }();
        // defect lands in the kernel; express it there.
        GradedMap defect_k(a, kc, 1);
        for (int m = defect_k.lo_degree(); m <= defect_k.hi_degree(); ++m) {
            Matrix rhs = defect.component(m);
            if (rhs.is_zero()) continue;
            auto sol = iota[m + 1].solve(rhs);
            if (!sol) throw Error("refused", "section defect escapes the kernel");
            defect_k.set_component(m, *sol);
        }
        GradedMap hk = compose(sk.iso, compose(elementary_contraction(sk.decl, fld),
                                               sk.iso.inverted()));
        GradedMap s = t - compose(iota_map, compose(hk, defect_k));

        // pi = kernel coordinates of (id - s∘f0).
        GradedMap one_minus = GradedMap::identity(bt) - compose(s, f0);
        GradedMap pi(bt, kc, 0);
        for (int n = kc.lo(); n <= kc.hi(); ++n) {
            Matrix rhs = one_minus.component(n);
            if (rhs.is_zero() && kc.dim(n) == 0) continue;
            auto sol = iota[n].solve(rhs);
            if (!sol) throw Error("refused", "projection escapes the kernel");
            if (!sol->is_zero()) pi.set_component(n, *sol);
        }
        Complex ea = sk.iso.source();
        out.layout_b = lb;
        out.layout_a = direct_sum_layout({a, ea});
        out.decl_a = sk.decl;
        out.decl_b = pad;
        out.b_tilde = lb.total;
        out.a_tilde = out.layout_a.total;
        out.f_tilde = compose(sum_inclusion(out.layout_a, 0), f0) +
                      compose(sum_inclusion(out.layout_a, 1),
                              compose(sk.iso.inverted(), pi));
    }

    // Self-check of the published postconditions.
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) out.self_check.add({"strictify:" + what, "", 0, 0, 0, false, ""});
    };
    check(is_elementary(build_elementary(out.decl_a, fld), true), "(i) A-padding elementary");
    check(is_elementary(build_elementary(out.decl_b, fld), true), "(ii) B-padding elementary");
    check(is_chain_map(out.f_tilde), "(iii) chain map");
    check(out.f_tilde.invertible(), "(iii) invertible");
    GradedMap restricted = compose(compose(sum_projection(out.layout_a, 0), out.f_tilde),
                                   sum_inclusion(out.layout_b, 0));
    check(restricted == f, "(iv) restriction is the input");
    if (injective) {
        GradedMap strong = compose(out.f_tilde, sum_inclusion(out.layout_b, 0));
        check(strong == compose(sum_inclusion(out.layout_a, 0), f),
              "(iv) restriction exact on the nose");
    }
    if (!out.self_check.ok()) throw Error("refused", "strictification self-check failed");
    return out;
}

DgSimplex connect_compose(const GTTLabelling& path) {
    if (path.dim != 1) throw Error("refused", "connect needs a 1-simplex");
    const Complex& a = path.complex_at(0, {0});
    const Complex& b = path.complex_at(1, {1});
    GradedMap phi = path.phi({0, 1}, {0, 1});
    const CellLabel& c0 = path.cell({0}, {0, 1})[0];
    const CellLabel& c1 = path.cell({1}, {0, 1})[0];
    SumLayout la = direct_sum_layout({a, c0.complement});
    SumLayout lbl = direct_sum_layout({b, c1.complement});
    GradedMap composite =
        compose(sum_projection(la, 0),
                compose(c0.triv.theta_inv,
                        compose(phi, compose(c1.triv.theta, sum_inclusion(lbl, 0)))));
    return dg_edge(composite);
}

GTTLabelling connect_strictify(const GTTLabelling& path) {
    if (path.dim != 1) throw Error("refused", "connect needs a 1-simplex");
    const Complex& a = path.complex_at(0, {0});
    const Complex& b = path.complex_at(1, {1});
    GradedMap phi = path.phi({0, 1}, {0, 1});
    const CellLabel& c0 = path.cell({0}, {0, 1})[0];
    const CellLabel& c1 = path.cell({1}, {0, 1})[0];

    Strictified st = strictify(phi);

    // New complements: the old ones followed by the strictification padding.
    auto build_side = [&](const Complex& corner, const CellLabel& old, const SumLayout& pad_lay,
                          const ElementaryDecl& pad_decl) {
        ElementaryDecl decl = old.decl;
        decl.summands.insert(decl.summands.end(), pad_decl.summands.begin(),
                             pad_decl.summands.end());
        Complex complement = direct_sum({old.complement, pad_lay.parts[1]});
        // corner ⊕ (old-compl ⊕ pad) flattens to the three-part layout, so a
        // map off the flattened sum is a map off corner ⊕ complement.
        SumLayout split = direct_sum_layout({corner, old.complement, pad_lay.parts[1]});
        SumLayout old_pair = direct_sum_layout({corner, old.complement});
        GradedMap theta =
            assemble(pad_lay, split,
                     {{0, 0, compose(old.triv.theta, sum_inclusion(old_pair, 0))},
                      {0, 1, compose(old.triv.theta, sum_inclusion(old_pair, 1))},
                      {1, 2, GradedMap::identity(pad_lay.parts[1])}});
        return CellLabel{std::move(decl), std::move(complement),
                         Trivialisation{theta, theta.inverted()}};
    };

    CellLabel new0 = build_side(a, c0, st.layout_a, st.decl_a);
    CellLabel new1 = build_side(b, c1, st.layout_b, st.decl_b);

    GTTLabelling out;
    out.dim = 1;
    out.vertex_labels.emplace(std::vector<int>{0}, dg_point(a));
    out.vertex_labels.emplace(std::vector<int>{1}, dg_point(b));
    out.vertex_labels.emplace(std::vector<int>{0, 1}, dg_edge(st.f_tilde));
    out.cell_labels.emplace(std::pair{std::vector<int>{0}, std::vector<int>{0, 1}},
                            std::vector<CellLabel>{new0});
    out.cell_labels.emplace(std::pair{std::vector<int>{1}, std::vector<int>{0, 1}},
                            std::vector<CellLabel>{new1});
    return out;
}

} // namespace twistkit
