#include "awggn/capacity.hpp"
#include "awggn/verify.hpp"

#include <benchmark/benchmark.h>

using namespace awggn;

static void BM_Gap(benchmark::State& state) {
    double beta = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gap(beta));
        beta = beta > 5.0 ? 0.1 : beta + 0.01;
    }
}
BENCHMARK(BM_Gap);

static void BM_ErgodicCapacity(benchmark::State& state) {
    const auto law = AlphaMuFading::unit_power(static_cast<double>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(ergodic_awgn_capacity(10.0, law));
}
BENCHMARK(BM_ErgodicCapacity)->Arg(1)->Arg(2)->Arg(4);

static void BM_OutputDensity(benchmark::State& state) {
    const ChannelConfig cfg(1.0, GGNoise::with_variance(0.5, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(output_density(cfg).mass());
}
BENCHMARK(BM_OutputDensity)->Unit(benchmark::kMillisecond);

static void BM_SampleGG(benchmark::State& state) {
    const GGNoise law(0.7, 1.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(law.sample(1, n, 8, 1).data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleGG)->Arg(100000);

static void BM_SampleAlphaMu(benchmark::State& state) {
    const auto law = AlphaMuFading::unit_power(1.5, 0.6);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(law.sample(1, n, 8, 1).data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleAlphaMu)->Arg(100000);
BENCHMARK_MAIN();
