#include <doctest.h>

#include "twistkit/generate.hpp"
#include "twistkit/serialize.hpp"

using namespace twistkit;

namespace {
const Field Q{};

TwistGenOptions desk() {
    TwistGenOptions o;
    o.amplitude = 2;
    o.max_dim = 2;
    return o;
}
} // namespace

TEST_CASE("twist files round trip byte-stably") {
    Rng rng(301);
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(3), desk(), Q);
    DescentFile f{1, Q, "twist",
                  TwistingCochainData{Cover{fx.space}, fx.labelling, fx.mc}};
    std::string text = canonical_text(f);
    DescentFile back = parse_descent_file(text);
    CHECK(back.kind == "twist");
    const auto& d = std::get<TwistingCochainData>(back.payload);
    CHECK(d.mc == fx.mc);
    CHECK(d.labelling == fx.labelling);
    CHECK(canonical_text(back) == text);
}

TEST_CASE("prime-field payloads") {
    Rng rng(303);
    Field f7{7};
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(2), desk(), f7);
    CHECK(is_mc(fx.mc).ok());
    DescentFile f{1, f7, "twist",
                  TwistingCochainData{Cover{fx.space}, fx.labelling, fx.mc}};
    DescentFile back = parse_descent_file(canonical_text(f));
    CHECK(std::get<TwistingCochainData>(back.payload).mc == fx.mc);
    CHECK(validate_descent_file(back).ok());
}

TEST_CASE("path and weq files round trip") {
    Rng rng(307);
    PathFixture pf = gen_path(rng, TupleSpace::cech_full(2), desk(), Q);
    TwistPathData path{Cover{pf.base}, pf.prism, pf.labelling, pf.mc};
    DescentFile f{1, Q, "path", path};
    DescentFile back = parse_descent_file(canonical_text(f));
    const auto& p2 = std::get<TwistPathData>(back.payload);
    CHECK(p2.mc == path.mc);
    CHECK(validate_descent_file(back).ok());

    WeakEquivalenceData w = path_to_weq(path);
    DescentFile wf{1, Q, "weq", w};
    DescentFile wback = parse_descent_file(canonical_text(wf));
    CHECK(std::get<WeakEquivalenceData>(wback.payload).lambda == w.lambda);
    CHECK(validate_descent_file(wback).ok());
}

TEST_CASE("stc files round trip and validate") {
    Rng rng(311);
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(2), desk(), Q);
    SimplicialTwistData stc =
        stc_from_twist(TwistingCochainData{Cover{fx.space}, fx.labelling, fx.mc});
    DescentFile f{1, Q, "stc", stc};
    DescentFile back = parse_descent_file(canonical_text(f));
    CHECK(std::get<SimplicialTwistData>(back.payload).tuples == stc.tuples);
    CHECK(validate_descent_file(back).ok());
}

TEST_CASE("cocycle files with gauge data") {
    Rng rng(313);
    Cover cover{TupleSpace::cech_full(2)};
    PrincipalCocycle g{cover, 2, {}};
    std::vector<Matrix> ms{rng.invertible(2, Q, 1), rng.invertible(2, Q, 1)};
    for (const Tuple& t : cover.space.tuples(1))
        g.g.emplace(std::pair{t[0], t[1]}, ms[t[1]] * *ms[t[0]].inverse());
    std::map<int, Matrix> lambda;
    Matrix u = rng.invertible(2, Q, 1);
    for (int a = 0; a < 2; ++a) lambda[a] = ms[a] * u * *ms[a].inverse();
    DescentFile f{1, Q, "cocycle", CocycleFile{g, g, lambda}};
    DescentFile back = parse_descent_file(canonical_text(f));
    CHECK(validate_descent_file(back).ok());
}

TEST_CASE("malformed input is a parse error") {
    CHECK_THROWS_AS(parse_descent_file("{ not json"), Error);
    CHECK_THROWS_AS(parse_descent_file("{\"format\": 2, \"field\": {\"type\": \"rational\"}, "
                                       "\"kind\": \"twist\", \"payload\": {}}"),
                    Error);
    CHECK_THROWS_AS(parse_descent_file("{\"format\": 1, \"field\": {\"type\": \"rational\"}, "
                                       "\"kind\": \"nope\", \"payload\": {}}"),
                    Error);
    // Truncated payload.
    CHECK_THROWS_AS(parse_descent_file("{\"format\": 1, \"field\": {\"type\": \"rational\"}, "
                                       "\"kind\": \"twist\", \"payload\": {}}"),
                    Error);
}

TEST_CASE("horn and gtt files") {
    Rng rng(317);
    DgSimplex s = random_core_simplex(rng, 1, Q, desk());
    GTTLabelling edge = include_twist(s);
    DescentFile f{1, Q, "horn", HornFile{"stc", edge, edge}};
    DescentFile back = parse_descent_file(canonical_text(f));
    const auto& h = std::get<HornFile>(back.payload);
    CHECK(h.edge_a == edge);
    CHECK(validate_descent_file(back).ok());

    GTTLabelling filled = fill_horn2(h.edge_a, h.edge_b, 0);
    DescentFile g{1, Q, "gtt", GttFile{filled}};
    DescentFile gback = parse_descent_file(canonical_text(g));
    CHECK(std::get<GttFile>(gback.payload).labelling == filled);
    CHECK(validate_descent_file(gback).ok());
}
