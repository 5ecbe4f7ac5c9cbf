#include <benchmark/benchmark.h>

#include <modcf/arith.hpp>
#include <modcf/sieve.hpp>

namespace {

using modcf::ArithFunction;

void BM_SieveResidues(benchmark::State& state, ArithFunction f)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    const modcf::ModulusContext ctx(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modcf::sieve_range(f, 1, hi, ctx));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_SieveResidues, phi, ArithFunction::phi())->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_SieveResidues, sigma_conv_phi, ArithFunction::sigma_conv_phi())->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_SieveResidues, nathanson_phi, ArithFunction::nathanson_phi())->Range(1 << 12, 1 << 20);
BENCHMARK_CAPTURE(BM_SieveResidues, nathanson_g, ArithFunction::nathanson_g())->Range(1 << 12, 1 << 20);

void BM_SieveExactSigma3(benchmark::State& state)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(modcf::sieve_range(ArithFunction::sigma(3), 1, hi));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveExactSigma3)->Range(1 << 12, 1 << 18);

} // namespace
