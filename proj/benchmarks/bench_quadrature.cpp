#include <benchmark/benchmark.h>

#include "slicebergman/quadrature.hpp"
#include "slicebergman/transform.hpp"

using namespace slicebergman;

namespace {

void BM_BuildHalfLine(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_halfline(1.0, state.range(0)));
}
BENCHMARK(BM_BuildHalfLine)->Arg(32)->Arg(128)->Arg(512);

void BM_BuildDisk(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            build_disk(1.0, 1.0, ImaginaryUnit::canonical_i(), state.range(0), 128));
}
BENCHMARK(BM_BuildDisk)->Arg(16)->Arg(64)->Arg(256);

void BM_KernelKernelIntegral(benchmark::State& state) {
    const KernelParams params{1.0, 1.0};
    const HalfLineRule rule = build_halfline(1.0, state.range(0));
    const Quaternion q{0.3, 0.2, -0.1, 0.1};
    const Quaternion q2{-0.2, 0.1, 0.3, 0.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_kernel_integral(q, q2, params, rule));
}
BENCHMARK(BM_KernelKernelIntegral)->Arg(32)->Arg(128);

void BM_Forward(benchmark::State& state) {
    const KernelParams params{1.0, 1.0};
    const HalfLineRule rule = build_halfline(1.0, state.range(0));
    LaguerreCoefficients phi{1.0, std::vector<Quaternion>(11)};
    phi.coeffs[10] = Quaternion{1.0};
    const Quaternion q{0.3, 0.2, -0.1, 0.1};
    for (auto _ : state)
        benchmark::DoNotOptimize(forward(phi, q, params, rule));
}
BENCHMARK(BM_Forward)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
