// Acceptance suite: every criterion runs at its stated tolerance (all exact)
// and prints one pass/fail line.  The process exits nonzero if any fails.

#include "fixtures.hpp"

#include "twistkit/descent.hpp"
#include "twistkit/group_cocycle.hpp"
#include "twistkit/pair_subdivision.hpp"
#include "twistkit/prism.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace twistkit;
using fixtures::Corner;
using fixtures::make_corner;
using fixtures::make_edge;

namespace {

const Field Q{};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void()> body;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

TwistGenOptions desk(int amp = 2, int dims = 3) {
    TwistGenOptions o;
    o.amplitude = amp;
    o.max_dim = dims;
    return o;
}

long pow2(int e) { return 1L << e; }

// ---------------------------------------------------------------- C1
void combinatorial_counts() {
    require(prism_simplices(1, 0).size() == 4, "square has 4 vertices");
    require(prism_simplices(1, 1).size() == 5, "square has 5 edges");
    require(prism_simplices(1, 2).size() == 2, "square has 2 triangles");
    for (int p = 0; p <= 8; ++p) {
        require(prism_simplices(p, p + 1).size() == std::size_t(p + 1),
                "prism top count p=" + std::to_string(p));
        require(bary_flags(p, 0).size() == std::size_t(pow2(p + 1) - 1),
                "barycentric vertex count p=" + std::to_string(p));
    }
    int c0 = 0, c1 = 0, c2 = 0;
    for (const PairCell& c : pair_cells(2)) {
        if (c.dim() == 0) ++c0;
        if (c.dim() == 1) ++c1;
        if (c.dim() == 2) ++c2;
    }
    require(c0 == 7 && c1 == 9 && c2 == 3, "pair subdivision cell counts 7/9/3");
    require(c0 - c1 + c2 == 1, "pair subdivision Euler characteristic");
    CellChain square = pair_boundary(PairCell(Face({0}, 2), Face({0, 1, 2}, 2)));
    require(square.terms.size() == 4, "boundary of (vertex, triangle) is a 2-cube");
}

// ---------------------------------------------------------------- C2
void differential_algebra() {
    Rng rng(20001);
    // ∂∘∂ = 0 and Leibniz, 500 exact cases each.
    for (int iter = 0; iter < 500; ++iter) {
        Complex a = random_complex(rng, Q, 0, 2, 3);
        Complex b = random_complex(rng, Q, 0, 2, 3);
        Complex c = random_complex(rng, Q, 0, 2, 3);
        int pq = rng.uniform(-2, 2), qq = rng.uniform(-2, 2);
        GradedMap f = random_graded_map(rng, a, b, qq);
        GradedMap g = random_graded_map(rng, b, c, pq);
        require(hom_differential(hom_differential(f)).is_zero(), "∂∘∂ = 0");
        GradedMap lhs = hom_differential(compose(g, f));
        GradedMap rhs = compose(g, hom_differential(f)) +
                        compose(hom_differential(g), f)
                            .scaled(Scalar::of(qq % 2 ? -1 : 1, Q));
        require(lhs == rhs, "Leibniz rule");
    }
    // δ̂² = 0 and D² = 0 on 500 fuzzed bigraded elements.
    TupleSpace space = TupleSpace::cech_full(3);
    TwistFixture fx = gen_twist(rng, space, desk(1, 2), Q);
    for (int iter = 0; iter < 500; ++iter) {
        BigradedElement e(fx.space, fx.labelling);
        for (int p = 1; p <= 2; ++p)
            for (const Tuple& t : space.all_tuples(p)) {
                if (!rng.chance(25)) continue;
                int q = rng.uniform(-1, 1);
                GradedMap g = random_graded_map(rng, fx.labelling.at(t.back()),
                                                fx.labelling.at(t.front()), q, 1, 80);
                if (!g.is_zero()) e.set_component(t, q, e.component(t, q) + g);
            }
        require(deleted_cech_diff(deleted_cech_diff(e)).is_zero(), "δ̂∘δ̂ = 0");
        require(total_diff(total_diff(e)).is_zero(), "D∘D = 0");
    }
    // Sign identity (-1)^{λ(j-1)} = (-1)^{(1-j)(λ-j)}.
    auto sgn = [](long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; };
    for (long lambda = 2; lambda <= 12; ++lambda)
        for (long j = 1; j < lambda; ++j)
            require(sgn(lambda * (j - 1)) == sgn((1 - j) * (lambda - j)),
                    "sign identity λ=" + std::to_string(lambda) + " j=" + std::to_string(j));
}

// ---------------------------------------------------------------- C3
void mc_nerve_bijection() {
    Rng rng(20003);
    int done = 0;
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + iter % 3; // |I| in {2,3,4}
        TupleSpace space = TupleSpace::cech_full(n);
        TwistFixture fx = gen_twist(rng, space, desk(2, 3), Q);
        SimplexFamily family = mc_to_labelling(fx.mc);
        for (const auto& [t, s] : family)
            require(validate_dg_simplex(s).ok(), "family member validates at " + to_string(t));
        BigradedElement back = labelling_to_mc(space, fx.labelling, family);
        require(back == fx.mc, "labelling_to_mc ∘ mc_to_labelling = id");
        require(mc_to_labelling(back) == family, "mc_to_labelling ∘ labelling_to_mc = id");
        ++done;
    }
    require(done >= 100, "100 fuzzed round trips");
}

// ---------------------------------------------------------------- C4
void descent_data_checks() {
    Rng rng(20005);
    // (a): conjugated trivial cocycles validate; a single-edge perturbation is
    // flagged at exactly the incident triangles.
    for (int iter = 0; iter < 10; ++iter) {
        TwistGenOptions opt = desk(2, 3);
        opt.iso_edges = true;
        TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(3), opt, Q);
        LocFreeData d{Cover{fx.space}, fx.labelling, {}};
        for (const Tuple& t : fx.space.tuples(1))
            d.edges.emplace(std::pair{t[0], t[1]}, fx.mc.component(t, 0));
        require(validate_locfree(d).ok(), "conjugated trivial cocycle accepted");

        d.edges.at({0, 1}) = d.edges.at({0, 1}).scaled(Scalar::of(2, Q));
        Report r = validate_locfree(d);
        require(!r.ok(), "perturbed cocycle rejected");
        std::set<std::string> flagged;
        for (const auto& rec : r.records) {
            require(rec.condition == "cocycle", "only triangle records");
            flagged.insert(rec.where);
        }
        std::set<std::string> expect;
        for (const Tuple& t : fx.space.all_tuples(2)) {
            if (t[0] == t[1] || t[1] == t[2]) continue;
            bool uses = (t[0] == 0 && t[1] == 1) || (t[1] == 0 && t[2] == 1) ||
                        (t[0] == 0 && t[2] == 1);
            if (uses) expect.insert(to_string(t));
        }
        require(flagged == expect, "exactly the incident triangles flagged");
    }
    // (b): the bidegree-(2,0) equation is the classical display.
    for (int iter = 0; iter < 10; ++iter) {
        TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(3), desk(2, 3), Q);
        for (const Tuple& t : fx.space.tuples(2)) {
            GradedMap lhs = hom_differential(fx.mc.component(t, -1));
            GradedMap rhs = resolve_component(fx.mc, {t[0], t[2]}, 0) -
                            compose(resolve_component(fx.mc, {t[0], t[1]}, 0),
                                    resolve_component(fx.mc, {t[1], t[2]}, 0));
            require(lhs == rhs, "∂f_xyz = f_xz - f_xy∘f_yz at " + to_string(t));
        }
    }
    // (c)/(d): inclusions of valid twisting cochains are valid simplicial
    // twisting data.
    for (int iter = 0; iter < 5; ++iter) {
        TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(3), desk(2, 3), Q);
        TwistingCochainData d{Cover{fx.space}, fx.labelling, fx.mc};
        require(validate_twisting_cochain(d).ok(), "fixture is a twisting cochain");
        require(validate_stc(stc_from_twist(d)).ok(), "inclusion passes validate_stc");
    }
}

// ---------------------------------------------------------------- C5
void paths_to_weak_equivalences() {
    Rng rng(20007);
    int done = 0;
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + iter % 2; // |I| in {2,3}
        PathFixture pf = gen_path(rng, TupleSpace::cech_full(n), desk(2, 3), Q);
        TwistPathData path{Cover{pf.base}, pf.prism, pf.labelling, pf.mc};
        require(validate_path(path).ok(), "fuzzed path validates");
        WeakEquivalenceData w = path_to_weq(path);
        require(validate_weq(w).ok(), "general equation δ̂λ + Eλ - λF = 0");

        auto E = [&](const Tuple& t) { return resolve_component(w.e.mc, t, 2 - int(t.size())); };
        auto F = [&](const Tuple& t) { return resolve_component(w.f.mc, t, 2 - int(t.size())); };
        auto L = [&](const Tuple& t) -> GradedMap {
            auto it = w.lambda.find(t);
            if (it != w.lambda.end()) return it->second;
            return GradedMap(w.f.labelling.at(t.back()), w.e.labelling.at(t.front()),
                             -(int(t.size()) - 1));
        };
        for (const Tuple& v : pf.base.tuples(0))
            require(is_chain_map(L(v)) && is_quasi_iso(L(v)), "(*0) diagonal quasi-iso");
        for (const Tuple& t : pf.base.tuples(1)) {
            GradedMap lhs = hom_differential(L(t));
            GradedMap rhs = compose(E(t), L({t[1]})) - compose(L({t[0]}), F(t));
            require(lhs == rhs, "(*1) at " + to_string(t));
        }
        for (const Tuple& t : pf.base.tuples(2)) {
            GradedMap lhs = hom_differential(L(t));
            GradedMap rhs = compose(E(t), L({t[2]})) - compose(L({t[0]}), F(t)) +
                            compose(E({t[0], t[1]}), L({t[1], t[2]})) +
                            compose(L({t[0], t[1]}), F({t[1], t[2]})) - L({t[0], t[2]});
            require(lhs == rhs, "(*2) at " + to_string(t));
        }
        ++done;
    }
    require(done >= 50, "50 fuzzed paths");
}

// ---------------------------------------------------------------- C6
void summand_homotopy_witness() {
    Rng rng(20011);
    for (int iter = 0; iter < 60; ++iter) {
        Complex c = random_complex(rng, Q, 0, rng.uniform(1, 3), 3);
        int m = rng.uniform(1, 3);
        Complex span = build_elementary(ElementaryDecl{{{m, 0}}}, Q);
        SummandHomotopy sh = summand_homotopy(c, span);
        require(compose(sh.projection, sh.inclusion) == GradedMap::identity(c),
                "p∘i = id on the nose");
        GradedMap want = compose(sh.inclusion, sh.projection) -
                         GradedMap::identity(sh.layout.total);
        require(hom_differential(sh.homotopy) == want, "∂h = i∘p - id exactly");
        // The single nonzero component is (0, -id_M) landing in degree 0.
        require(sh.homotopy.components().size() == 1, "homotopy concentrated in one block");
        Matrix block = sh.homotopy.component(1);
        Matrix expect(sh.layout.total.dim(0), sh.layout.total.dim(1), Q);
        expect.set_block(sh.layout.offset(1, 0), sh.layout.offset(1, 1),
                         -Matrix::identity(m, Q));
        require(block == expect, "homotopy block is (0, -id_M)");
    }
}

// ---------------------------------------------------------------- C7
void horn_filling() {
    Rng rng(20013);
    int pairs = 0;
    for (int iter = 0; iter < 51; ++iter) {
        int h = iter % 3;
        Complex base = random_complex(rng, Q, 0, 2, 2);
        Corner shared = make_corner(rng, base);
        Corner oa = make_corner(rng, base);
        Corner ob = make_corner(rng, base);
        GTTLabelling ea, eb;
        if (h == 0) { ea = make_edge(rng, shared, oa, false); eb = make_edge(rng, shared, ob, false); }
        if (h == 1) { ea = make_edge(rng, oa, shared, false); eb = make_edge(rng, shared, ob, false); }
        if (h == 2) { ea = make_edge(rng, oa, shared, false); eb = make_edge(rng, ob, shared, false); }
        GTTLabelling filled = fill_horn2(ea, eb, h);
        require(validate_gtt(filled).ok(), "filled labelling validates (h=" +
                                               std::to_string(h) + ")");
        std::vector<int> ea_pos = h == 2 ? std::vector<int>{0, 2} : std::vector<int>{0, 1};
        std::vector<int> eb_pos = h == 0 ? std::vector<int>{0, 2} : std::vector<int>{1, 2};
        require(gtt_face(filled, 3 - ea_pos[0] - ea_pos[1]) == ea, "face a bit-exact");
        require(gtt_face(filled, 3 - eb_pos[0] - eb_pos[1]) == eb, "face b bit-exact");

        // Green filler on iso edges.
        Corner c = make_corner(rng, base);
        GTTLabelling ga = make_edge(rng, c, c, true);
        GTTLabelling gb = make_edge(rng, c, c, true);
        GTTLabelling gfilled = fill_horn2_green(ga, gb, h);
        require(validate_gtt(gfilled).ok(), "green filler validates");
        require(is_gtt1(gfilled), "green filler stays strict");
        require(gfilled.at({0, 1, 2}).label({0, 1, 2}).is_zero(),
                "green homotopy component exactly zero");
        require(gfilled.phi({1, 2}, {0, 1, 2}).invertible() &&
                    gfilled.phi({0, 1}, {0, 1, 2}).invertible() &&
                    gfilled.phi({0, 2}, {0, 1, 2}).invertible(),
                "green edges invertible");
        ++pairs;
    }
    require(pairs >= 51, "51 fuzzed horn pairs over all three indices");
}

// ---------------------------------------------------------------- C8
void strictification() {
    Rng rng(20017);
    int done = 0;
    for (int iter = 0; iter < 50; ++iter) {
        Complex base = random_complex(rng, Q, 0, 2, 2);
        Complex e = build_elementary(
            ElementaryDecl{{{rng.uniform(1, 2), rng.uniform(0, 1)}}}, Q);
        SummandHomotopy pad = summand_homotopy(base, e);
        GradedMap f = rng.chance(50) ? pad.inclusion : pad.projection;
        GradedMap rs = random_chain_iso(rng, f.source());
        GradedMap rt = random_chain_iso(rng, f.target());
        f = compose(rt, compose(f, rs.inverted()));
        Strictified st = strictify(f);
        require(st.self_check.ok(), "built-in self-check");
        require(is_elementary(build_elementary(st.decl_a, Q), true), "(i) elementary A-padding");
        require(is_elementary(build_elementary(st.decl_b, Q), true), "(ii) elementary B-padding");
        require(is_chain_map(st.f_tilde) && st.f_tilde.invertible(), "(iii) isomorphism");
        GradedMap restricted = compose(compose(sum_projection(st.layout_a, 0), st.f_tilde),
                                       sum_inclusion(st.layout_b, 0));
        require(restricted == f, "(iv) restriction is the input map");
        ++done;
    }
    require(done >= 50, "50 fuzzed quasi-isos");

    // Connecting through strictification realises the Green equivalence
    // constructively on instances.
    for (int iter = 0; iter < 12; ++iter) {
        Complex base = random_complex(rng, Q, 0, 2, 2);
        Corner a = make_corner(rng, base);
        Corner b = make_corner(rng, base);
        GTTLabelling path = make_edge(rng, a, b, false);
        GTTLabelling green = connect_strictify(path);
        require(validate_gtt(green).ok() && is_gtt1(green),
                "connect_strictify output is a Green 1-simplex");
        DgSimplex composed = connect_compose(path);
        require(is_quasi_iso(composed.label({0, 1})), "connect_compose quasi-iso");
    }
}

// ---------------------------------------------------------------- C9
void principal_cocycles() {
    Rng rng(20019);
    Cover cover{TupleSpace::cech_full(3)};
    int n = 3;
    PrincipalCocycle ident{cover, n, {}};
    for (const Tuple& t : cover.space.tuples(1))
        ident.g.emplace(std::pair{t[0], t[1]}, Matrix::identity(n, Q));
    require(validate_principal_cocycle(ident).ok(), "constant identity cocycle");

    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Matrix> ms;
        for (int a = 0; a < 3; ++a) ms.push_back(rng.invertible(n, Q, 2));
        PrincipalCocycle conj{cover, n, {}};
        for (const Tuple& t : cover.space.tuples(1))
            conj.g.emplace(std::pair{t[0], t[1]}, ms[t[1]] * *ms[t[0]].inverse());
        require(validate_principal_cocycle(conj).ok(), "conjugated cocycle");

        Matrix u = rng.invertible(n, Q, 1);
        std::map<int, Matrix> lambda;
        for (int a = 0; a < 3; ++a) lambda[a] = ms[a] * u * *ms[a].inverse();
        require(validate_gauge(lambda, conj, conj).ok(), "gauge relation h λ = λ g");
    }

    PrincipalCocycle bad = ident;
    Matrix singular = Matrix::identity(n, Q);
    singular.at(0, 0) = Scalar::zero(Q);
    bad.g.at({0, 1}) = singular;
    Report r = validate_principal_cocycle(bad);
    bool rejected = false;
    for (const auto& rec : r.records)
        if (rec.condition == "not-invertible") rejected = true;
    require(rejected, "rank-deficient matrix rejected");
}

// ---------------------------------------------------------------- C10
void simplicial_identities() {
    Rng rng(20023);
    for (int iter = 0; iter < 6; ++iter) {
        int p = 1 + iter % 3;
        DgSimplex s = random_core_simplex(rng, p, Q, desk(2, 2));
        GTTLabelling l = include_twist(s);
        auto check_all = [&](auto face, auto degeneracy, const auto& x, const char* whom) {
            std::string who(whom);
            if (p >= 2)
                for (int j = 1; j <= p; ++j)
                    for (int i = 0; i < j; ++i)
                        require(face(face(x, j), i) == face(face(x, i), j - 1),
                                who + " d_i d_j = d_{j-1} d_i");
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= j; ++i)
                    require(degeneracy(degeneracy(x, j), i) ==
                                degeneracy(degeneracy(x, i), j + 1),
                            who + " s_i s_j = s_{j+1} s_i");
            for (int j = 0; j <= p; ++j)
                for (int i = 0; i <= p + 1; ++i) {
                    if (i == j || i == j + 1) {
                        require(face(degeneracy(x, j), i) == x, who + " d s = id");
                    } else if (i < j) {
                        require(face(degeneracy(x, j), i) == degeneracy(face(x, i), j - 1),
                                who + " d_i s_j, i < j");
                    } else {
                        require(face(degeneracy(x, j), i) == degeneracy(face(x, i - 1), j),
                                who + " d_i s_j, i > j+1");
                    }
                }
        };
        check_all([](const DgSimplex& x, int i) { return dg_face(x, i); },
                  [](const DgSimplex& x, int i) { return dg_degeneracy(x, i); }, s, "dg-nerve");
        check_all([](const GTTLabelling& x, int i) { return gtt_face(x, i); },
                  [](const GTTLabelling& x, int i) { return gtt_degeneracy(x, i); }, l, "gtt");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"combinatorial counts (prism, barycentric, pair subdivision)", 1.0,
         combinatorial_counts},
        {"differential algebra: ∂²=0, δ̂²=0, D²=0, Leibniz, sign identity", 30.0,
         differential_algebra},
        {"Maurer-Cartan / nerve-map bijection round trips", 120.0, mc_nerve_bijection},
        {"descent data checks: cocycles, bidegree (2,0), inclusions", 120.0,
         descent_data_checks},
        {"paths give weak equivalences ((*0),(*1),(*2), general equation)", 60.0,
         paths_to_weak_equivalences},
        {"summand homotopy witness (0, -id_M) and ∂h = i∘p - id", 30.0,
         summand_homotopy_witness},
        {"2-horn filling with faces preserved bit-exactly; strict Green filler", 120.0,
         horn_filling},
        {"strictification postconditions (i)-(iv); Green connection", 120.0, strictification},
        {"principal matrix cocycles and gauge relations", 10.0, principal_cocycles},
        {"simplicial identities for dg-nerve and gtt labellings", 120.0,
         simplicial_identities},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            criteria[i].body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && secs > criteria[i].budget_seconds) {
            verdict = "FAIL";
            detail = "over time budget";
            ++failures;
        }
        std::printf("%s  criterion %zu: %s (%.2fs)%s%s\n", verdict.c_str(), i + 1,
                    criteria[i].name.c_str(), secs, detail.empty() ? "" : " — ",
                    detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
