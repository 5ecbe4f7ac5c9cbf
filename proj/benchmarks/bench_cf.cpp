#include <benchmark/benchmark.h>

#include <memory>

#include <modcf/cf.hpp>
#include <modcf/streams.hpp>

namespace {

void BM_AbdQuotients(benchmark::State& state)
{
    const auto count = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        modcf::ThetaEnclosure enc(std::make_shared<modcf::DigitStream>(modcf::parse_stream_spec("half_phi%7>dec")));
        auto cf = modcf::abd_quotients(enc, 3, count);
        benchmark::DoNotOptimize(modcf::alpha_decimals(cf, 30));
    }
}
BENCHMARK(BM_AbdQuotients)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
