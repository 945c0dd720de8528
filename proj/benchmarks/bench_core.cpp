#include <benchmark/benchmark.h>

#include "genfourier/atoms.hpp"
#include "genfourier/kernel.hpp"
#include "genfourier/special_fn.hpp"
#include "genfourier/transform.hpp"

using namespace genfourier;

static void BM_NormalizedBessel(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    const BesselOrder order(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(normalized_bessel(order, z));
}
BENCHMARK(BM_NormalizedBessel)->Arg(1)->Arg(10)->Arg(30)->Arg(50);

static void BM_KernelMatrixFill(benchmark::State& state) {
    const Params p = Params::create(1.0, 1);
    const auto n = static_cast<int>(state.range(0));
    const auto src = QuadratureGrid::gauss_legendre(p, 6.0, n, 16);
    const auto tgt = QuadratureGrid::gauss_legendre(p, 6.0, n, 16);
    for (auto _ : state) {
        const TransformPlan plan = TransformPlan::create(src, tgt);
        benchmark::DoNotOptimize(plan.cached_kernel(0, 0));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_KernelMatrixFill)->Arg(256)->Arg(512);

static void BM_ForwardApply(benchmark::State& state) {
    const Params p = Params::create(1.0, 1);
    const auto n = static_cast<int>(state.range(0));
    const auto src = QuadratureGrid::gauss_legendre(p, 6.0, n, 16);
    const auto tgt = QuadratureGrid::gauss_legendre(p, 6.0, n, 16);
    const TransformPlan plan = TransformPlan::create(src, tgt);
    const GridFunction f = sample(src, AtomSum::gaussian(0.5));
    for (auto _ : state) benchmark::DoNotOptimize(plan.forward(f).values[0]);
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ForwardApply)->Arg(512)->Arg(1024);

static void BM_IteratedOperators(benchmark::State& state) {
    const Params p = Params::create(0.8, 2);
    const AtomSum f = AtomSum::gaussian(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(sequence_h(f, 2, 2, p).terms().size());
}
BENCHMARK(BM_IteratedOperators);

BENCHMARK_MAIN();
