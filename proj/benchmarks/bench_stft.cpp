#include <benchmark/benchmark.h>

#include "modspace/defaults.hpp"
#include "modspace/stft.hpp"

namespace {

void BM_STFT(benchmark::State& state) {
    using namespace modspace;
    const Grid grid(1, 4096, 32.0 / 4096.0);
    const Grid lattice = default_time_lattice(grid, static_cast<int>(state.range(0)));
    const SampledSignal f = sample(FunctionExpr::gaussian(1.0), grid);
    const WindowSpec g = WindowSpec::normalized_gaussian(1);
    for (auto _ : state) {
        auto tf = stft(f, g, lattice);
        benchmark::DoNotOptimize(tf.values.data());
    }
}
BENCHMARK(BM_STFT)->Arg(32)->Arg(8)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace
