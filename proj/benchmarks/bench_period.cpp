#include <benchmark/benchmark.h>

#include <modcf/period.hpp>
#include <modcf/streams.hpp>
#include <modcf/witness.hpp>

namespace {

void BM_ScanPeriod(benchmark::State& state)
{
    const auto len = static_cast<std::uint64_t>(state.range(0));
    const auto seq = modcf::stream_values(modcf::parse_stream_spec("tau%691"), 1, len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modcf::scan_period(std::span<const std::uint64_t>(seq), 50, 200));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanPeriod)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Witness(benchmark::State& state)
{
    const auto N = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            modcf::witness_violation(modcf::ArithFunction::nathanson_phi(), 9, 20, N, modcf::Criterion::divisibility));
    }
}
BENCHMARK(BM_Witness)->Arg(1)->Arg(1000000)->Arg(1000000000000LL);

} // namespace
