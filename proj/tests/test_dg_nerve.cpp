#include <doctest.h>

#include "twistkit/generate.hpp"

using namespace twistkit;

namespace {
const Field Q{};

Matrix from_rows(std::vector<std::vector<long>> rows, Field f) {
    Matrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Scalar::of(rows[i][j], f);
    return m;
}

TwistGenOptions desk() {
    TwistGenOptions o;
    o.amplitude = 2;
    o.max_dim = 2;
    return o;
}
} // namespace

TEST_CASE("validating 1- and 2-simplices") {
    Rng rng(5);
    Complex c = random_complex(rng, Q, 0, 2, 3);
    DgSimplex edge = dg_edge(GradedMap::identity(c));
    CHECK(validate_dg_simplex(edge).ok());

    // A non-chain-map edge is reported.
    GradedMap bad = random_graded_map(rng, c, c, 0, 2, 20);
    if (!is_chain_map(bad)) {
        DgSimplex b = dg_edge(bad);
        Report r = validate_dg_simplex(b);
        CHECK_FALSE(r.ok());
        CHECK(r.records[0].condition == "edge-not-chain-map");
    }

    // p = 2 relation: ∂f_{012} = f_{02} - f_{01}∘f_{12} (composite applied
    // back-half first).
    DgSimplex s = random_core_simplex(rng, 2, Q, desk());
    CHECK(validate_dg_simplex(s).ok());
    GradedMap lhs = hom_differential(s.label({0, 1, 2}));
    GradedMap rhs = s.label({0, 2}) - compose(s.label({0, 1}), s.label({1, 2}));
    CHECK(lhs == rhs);

    // All-zero maps on equal zero-differential objects validate at p = 3.
    Complex flat(Q, 0, {2}, {});
    DgSimplex z{{flat, flat, flat, flat}, {}};
    for (int k = 1; k <= 3; ++k)
        for (const Face& f : enumerate_faces(3, k)) {
            if (k == 1) z.morphisms.emplace(f.vertices, GradedMap(flat, flat, 0));
            else z.morphisms.emplace(f.vertices, GradedMap(flat, flat, 2 - int(k + 1)));
        }
    // Edges must be chain maps; zero maps on zero-differential complexes are.
    CHECK(validate_dg_simplex(z).ok());
}

TEST_CASE("golden sign check of the defining relation at p = 3") {
    // Independent transcription of the relation with explicit signs,
    // evaluated on arbitrary (not necessarily valid) labels.
    Rng rng(17);
    std::vector<Complex> obj;
    for (int i = 0; i < 4; ++i) obj.push_back(random_complex(rng, Q, 0, 2, 2));
    DgSimplex s{obj, {}};
    for (int k = 1; k <= 3; ++k)
        for (const Face& f : enumerate_faces(3, k))
            s.morphisms.emplace(
                f.vertices,
                random_graded_map(rng, obj[f.vertices.back()], obj[f.vertices.front()], 1 - k, 2,
                                  30));
    for (int k = 2; k <= 3; ++k)
        for (const Face& face : enumerate_faces(3, k)) {
            const auto& I = face.vertices;
            GradedMap expected = hom_differential(s.label(I));
            for (int j = 1; j <= k - 1; ++j) {
                std::vector<int> drop = I;
                drop.erase(drop.begin() + j);
                std::vector<int> front(I.begin(), I.begin() + j + 1);
                std::vector<int> back(I.begin() + j, I.end());
                int s1 = (j - 1) % 2 == 0 ? 1 : -1;
                int s2 = (k * (j - 1) + 1) % 2 == 0 ? 1 : -1;
                expected = expected - s.label(drop).scaled(Scalar::of(s1, Q)) -
                           compose(s.label(front), s.label(back)).scaled(Scalar::of(s2, Q));
            }
            CHECK(dg_relation_residual(s, I) == expected);
        }
}

TEST_CASE("face and degeneracy maps") {
    Rng rng(29);
    for (int iter = 0; iter < 6; ++iter) {
        int p = rng.uniform(1, 3);
        DgSimplex s = random_core_simplex(rng, p, Q, desk());
        REQUIRE(validate_dg_simplex(s).ok());

        // Faces of a valid simplex are valid.
        for (int i = 0; i <= p; ++i) CHECK(validate_dg_simplex(dg_face(s, i)).ok());

        // Degeneracies are valid and satisfy the simplicial identities.
        for (int i = 0; i <= p; ++i) {
            DgSimplex d = dg_degeneracy(s, i);
            CHECK(validate_dg_simplex(d).ok());
            CHECK(dg_face(d, i) == s);
            CHECK(dg_face(d, i + 1) == s);
        }

        // d_i d_j = d_{j-1} d_i for i < j.
        if (p >= 2)
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i)
                    CHECK(dg_face(dg_face(s, j), i) == dg_face(dg_face(s, i), j - 1));

        // s_i s_j = s_{j+1} s_i for i <= j.
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(dg_degeneracy(dg_degeneracy(s, j), i) ==
                      dg_degeneracy(dg_degeneracy(s, i), j + 1));

        // d_i s_j identities for i < j and i > j+1.
        for (int j = 0; j <= p; ++j)
            for (int i = 0; i <= p + 1; ++i) {
                if (i < j) CHECK(dg_face(dg_degeneracy(s, j), i) ==
                                 dg_degeneracy(dg_face(s, i), j - 1));
                else if (i > j + 1 && p >= 1)
                    CHECK(dg_face(dg_degeneracy(s, j), i) ==
                          dg_degeneracy(dg_face(s, i - 1), j));
            }
    }
}

TEST_CASE("degeneracy of an edge fills the triangle relation with zero homotopy") {
    Rng rng(43);
    DgSimplex s = random_core_simplex(rng, 1, Q, desk());
    DgSimplex d0 = dg_degeneracy(s, 0);
    CHECK(d0.label({0, 1}) == GradedMap::identity(s.objects[0]));
    CHECK(d0.label({0, 1, 2}).is_zero());
    CHECK(validate_dg_simplex(d0).ok());
    DgSimplex d1 = dg_degeneracy(s, 1);
    CHECK(d1.label({1, 2}) == GradedMap::identity(s.objects[1]));
    CHECK(d1.label({0, 1}) == s.label({0, 1}));
    CHECK(d1.label({0, 2}) == s.label({0, 1}));
}

TEST_CASE("core membership") {
    Rng rng(53);
    Complex c = random_complex(rng, Q, 0, 2, 3);
    DgSimplex ident = dg_edge(GradedMap::identity(c));
    CHECK(in_core(ident));
    CHECK(is_ordinary_core(ident));

    // Zero map between non-acyclic complexes is not in the core.
    Complex pt = Complex::point(Q, 0);
    CHECK_FALSE(in_core(dg_edge(GradedMap(pt, pt, 0))));

    // Padded inclusions are quasi-isos but not isos.
    Complex span = build_elementary(ElementaryDecl{{{1, 0}}}, Q);
    SummandHomotopy sh = summand_homotopy(pt, span);
    DgSimplex incl = dg_edge(sh.inclusion);
    CHECK(in_core(incl));
    CHECK_FALSE(is_ordinary_core(incl));

    // A nonzero homotopy label leaves the ordinary nerve.
    DgSimplex s = random_core_simplex(rng, 2, Q, desk());
    if (!s.label({0, 1, 2}).is_zero()) CHECK_FALSE(is_ordinary_core(s));

    // Strictly composed nerve simplices stay ordinary when edges invert.
    Complex flat(Q, 0, {2}, {});
    GradedMap a(flat, flat, 0), b(flat, flat, 0);
    a.set_component(0, from_rows({{1, 1}, {0, 1}}, Q));
    b.set_component(0, from_rows({{2, 0}, {1, 1}}, Q));
    DgSimplex ns = nerve_simplex({flat, flat, flat}, {a, b});
    CHECK(validate_dg_simplex(ns).ok());
    CHECK(is_ordinary_core(ns));
    CHECK(ns.label({0, 2}) == compose(a, b));
}
