#include <benchmark/benchmark.h>

#include "gammakit/chromatic.hpp"
#include "gammakit/positivity.hpp"
#include "gammakit/tableaux.hpp"

using namespace gammakit;

static void BM_QExpansion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_q_expansion(n));
}
BENCHMARK(BM_QExpansion)->Arg(8)->Arg(16)->Arg(24);

static void BM_RibbonCoarseningSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> parts(static_cast<std::size_t>(n / 2), 2);
    const Composition alpha(parts);
    for (auto _ : state) benchmark::DoNotOptimize(ribbon_p_expansion(alpha));
}
BENCHMARK(BM_RibbonCoarseningSum)->Arg(8)->Arg(12)->Arg(16);

static void BM_RibbonDeterminant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> parts(static_cast<std::size_t>(n / 2), 2);
    const Composition alpha(parts);
    for (auto _ : state) benchmark::DoNotOptimize(ribbon_det(alpha));
}
BENCHMARK(BM_RibbonDeterminant)->Arg(8)->Arg(12);

static void BM_VerifyConjecture(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(n, 1));
}
BENCHMARK(BM_VerifyConjecture)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SkewQOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SkewShape shape = SkewShape::from_ribbon(triangle(n, 3));
    for (auto _ : state) benchmark::DoNotOptimize(skew_Q(shape));
}
BENCHMARK(BM_SkewQOracle)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ChromaticSix(benchmark::State& state) {
    const SimpleGraph k6 = SimpleGraph::from_mask(6, (1u << 15) - 1);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_sym(k6));
}
BENCHMARK(BM_ChromaticSix)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
