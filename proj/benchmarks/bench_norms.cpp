#include <benchmark/benchmark.h>

#include "modspace/norms.hpp"

namespace {

void BM_ModulationNorm(benchmark::State& state) {
    using namespace modspace;
    const Grid grid(1, static_cast<int>(state.range(0)),
                    32.0 / static_cast<double>(state.range(0)));
    const FunctionExpr f = FunctionExpr::bump(1.0) * FunctionExpr::chirp(4.0);
    const WindowSpec g = WindowSpec::normalized_gaussian(1);
    const NormParams params(1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modulation_norm(f, g, params, grid));
    }
}
BENCHMARK(BM_ModulationNorm)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_MixedNorm(benchmark::State& state) {
    using namespace modspace;
    const Grid grid(1, 4096, 32.0 / 4096.0);
    const Grid lattice = default_time_lattice(grid);
    const TFMatrix tf = stft(sample(FunctionExpr::gaussian(1.0), grid),
                             WindowSpec::normalized_gaussian(1), lattice);
    const NormParams params(state.range(0) == 0 ? inf
                                                : static_cast<double>(state.range(0)),
                            1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_norm(tf, params));
    }
}
BENCHMARK(BM_MixedNorm)->Arg(1)->Arg(2)->Arg(0)->Unit(benchmark::kMillisecond);

} // namespace
