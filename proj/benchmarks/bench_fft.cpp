#include <benchmark/benchmark.h>

#include "modspace/fft.hpp"
#include "modspace/spectral.hpp"
#include "modspace/function_expr.hpp"

namespace {

void BM_FFTRadix2(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::complex<double>> data(n);
    for (std::size_t i = 0; i < n; ++i)
        data[i] = {std::sin(0.1 * static_cast<double>(i)), 0.0};
    for (auto _ : state) {
        auto copy = data;
        modspace::fft_radix2(copy);
        benchmark::DoNotOptimize(copy.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FFTRadix2)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_ForwardFT(benchmark::State& state) {
    using namespace modspace;
    const Grid grid(1, static_cast<int>(state.range(0)),
                    32.0 / static_cast<double>(state.range(0)));
    const SampledSignal s = sample(FunctionExpr::gaussian(1.0), grid);
    for (auto _ : state) {
        auto sp = forward_ft(s);
        benchmark::DoNotOptimize(sp.values.data());
    }
}
BENCHMARK(BM_ForwardFT)->Arg(1024)->Arg(4096)->Arg(16384);

} // namespace
