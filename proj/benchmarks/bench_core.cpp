#include "twistkit/descent.hpp"
#include "twistkit/generate.hpp"

#include <benchmark/benchmark.h>

using namespace twistkit;

namespace {

const Field Q{};

TwistGenOptions desk(int amp, int dims) {
    TwistGenOptions o;
    o.amplitude = amp;
    o.max_dim = dims;
    return o;
}

void bm_rational_rref(benchmark::State& state) {
    Rng rng(1);
    int n = int(state.range(0));
    Matrix m = rng.matrix(n, n, Q, 3, 20);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(bm_rational_rref)->Arg(8)->Arg(16)->Arg(32);

void bm_whitehead_inverse(benchmark::State& state) {
    Rng rng(2);
    Complex base = random_complex(rng, Q, 0, 2, int(state.range(0)));
    Complex span = build_elementary(ElementaryDecl{{{2, 0}}}, Q);
    SummandHomotopy sh = summand_homotopy(base, span);
    GradedMap r = random_chain_iso(rng, sh.layout.total);
    GradedMap f = compose(r, sh.inclusion);
    for (auto _ : state) benchmark::DoNotOptimize(whitehead_inverse(f));
}
BENCHMARK(bm_whitehead_inverse)->Arg(2)->Arg(4);

void bm_mc_validation(benchmark::State& state) {
    Rng rng(3);
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(int(state.range(0))), desk(2, 2), Q);
    for (auto _ : state) benchmark::DoNotOptimize(is_mc(fx.mc).ok());
}
BENCHMARK(bm_mc_validation)->Arg(2)->Arg(3)->Arg(4);

void bm_fill_horn2(benchmark::State& state) {
    Rng rng(4);
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(2), desk(2, 2), Q);
    SimplexFamily family = mc_to_labelling(fx.mc);
    GTTLabelling edge = include_twist(family.at({0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(fill_horn2(edge, edge, 0));
}
BENCHMARK(bm_fill_horn2);

void bm_path_to_weq(benchmark::State& state) {
    Rng rng(5);
    TwistFixture fx = gen_twist(rng, TupleSpace::cech_full(int(state.range(0))), desk(2, 2), Q);
    TwistPathData path = degenerate_path(TwistingCochainData{Cover{fx.space}, fx.labelling,
                                                             fx.mc});
    for (auto _ : state) benchmark::DoNotOptimize(path_to_weq(path));
}
BENCHMARK(bm_path_to_weq)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
