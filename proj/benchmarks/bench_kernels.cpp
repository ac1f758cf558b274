#include <benchmark/benchmark.h>

#include "slicebergman/bergman.hpp"
#include "slicebergman/verification.hpp"

using namespace slicebergman;

namespace {

const Quaternion kQ{0.42, 0.31, -0.18, 0.27};
const Quaternion kP{-0.12, 0.22, 0.35, -0.41};

void BM_KernelSeries(benchmark::State& state) {
    const KernelParams params{static_cast<double>(state.range(0)), 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_series(kQ, kP, params));
}
BENCHMARK(BM_KernelSeries)->Arg(1)->Arg(4);

void BM_KernelClosed(benchmark::State& state) {
    const KernelParams params{static_cast<double>(state.range(0)), 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_closed(kQ, kP, params));
}
BENCHMARK(BM_KernelClosed)->Arg(1)->Arg(4);

void BM_KernelAlpha1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_alpha1(kQ, kP, 1.0));
}
BENCHMARK(BM_KernelAlpha1);

void BM_KernelViaRepresentation(benchmark::State& state) {
    const KernelParams params{1.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_via_representation(kQ, kP, params));
}
BENCHMARK(BM_KernelViaRepresentation);

void BM_FockKernel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fock_kernel(1.0, kQ, kP));
}
BENCHMARK(BM_FockKernel);

void BM_Reproduce(benchmark::State& state) {
    const KernelParams params{1.0, 1.0};
    const DiskRule rule =
        build_disk(1.0, 1.0, ImaginaryUnit::canonical_i(), state.range(0), 2 * state.range(0));
    Rng rng(1);
    SeriesFunction f;
    f.radius = 1.0;
    for (int n = 0; n <= 10; ++n) f.coeffs.push_back(rng.ball(1.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reproduce(f, kQ, params, rule));
}
BENCHMARK(BM_Reproduce)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
