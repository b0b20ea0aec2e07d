#include <benchmark/benchmark.h>

#include "cliffpair/catalog.hpp"
#include "cliffpair/spin.hpp"
#include "cliffpair/transgress.hpp"

#include <random>

using namespace cliffpair;

namespace {

Multivector random_element(const QuadraticSpace* sp, std::mt19937_64& rng, int blades) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<uint64_t> mask(0, (uint64_t(1) << sp->dim()) - 1);
    Multivector out(sp);
    for (int b = 0; b < blades; ++b) out.add_term(mask(rng), Scalar(num(rng)));
    return out;
}

void BM_cliff_mul(benchmark::State& state) {
    SymmetricPair pr = build_catalog_pair("sl5-so5");
    PairContext ctx(pr);
    std::mt19937_64 rng(7);
    Multivector a = random_element(ctx.p_space(), rng, 8);
    Multivector b = random_element(ctx.p_space(), rng, 8);
    for (auto _ : state) benchmark::DoNotOptimize(cliff_mul(a, b));
}
BENCHMARK(BM_cliff_mul);

void BM_transgress_p3_sl3(benchmark::State& state) {
    LieAlgebra g = build_sl(3);
    QuadraticSpace sp = make_g_space(g);
    for (auto _ : state) benchmark::DoNotOptimize(transgress_power_sum(g, 3, &sp));
}
BENCHMARK(BM_transgress_p3_sl3);

void BM_primitives_sl4_sp4(benchmark::State& state) {
    SymmetricPair pr = build_catalog_pair("sl4-sp4");
    PairContext ctx(pr);
    for (auto _ : state) benchmark::DoNotOptimize(primitives_p(ctx));
}
BENCHMARK(BM_primitives_sl4_sp4);

void BM_invariants_sl3_so3(benchmark::State& state) {
    SymmetricPair pr = build_catalog_pair("sl3-so3");
    for (auto _ : state) {
        PairContext ctx(pr);
        benchmark::DoNotOptimize(invariants_cl(ctx, InvariantFlavor::CL_K_GROUP));
    }
}
BENCHMARK(BM_invariants_sl3_so3);

} // namespace

BENCHMARK_MAIN();
