#include <benchmark/benchmark.h>

#include <modcf/qseries.hpp>

namespace {

void BM_DeltaExpansion(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(modcf::delta_expansion(n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DeltaExpansion)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_TauCongruences(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(modcf::verify_tau_congruences(static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_TauCongruences)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
