#include <benchmark/benchmark.h>

#include <numbers>

#include "sliderule/cyclic.hpp"

namespace {

using namespace sliderule;

const CycleParams kElliptic{0.6, std::numbers::pi / 2, std::numbers::pi / 3};
const CycleParams kHyperbolic{1.0, std::numbers::pi, -5 * std::numbers::pi / 6};

// Closed form alone: decomposition plus the N-scaled core, no oracle.
void BM_ClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const CycleDecomposition d = decompose_cycle(kElliptic);
        const auto [z, a] = zaz_split(d.core);
        const RealMat2 m = rotation(-kElliptic.phi2 / 2) * z * core_power(d.core, n) *
                           inverse(z) * rotation(kElliptic.phi2 / 2);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(10)->Range(1, 100000);

void BM_BrutePower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RealMat2 m2 = cycle_m2(kElliptic);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pow_brute(m2, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BrutePower)->RangeMultiplier(10)->Range(1, 100000)->Complexity(benchmark::oN);

void BM_Decompose(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_cycle(kHyperbolic));
    }
}
BENCHMARK(BM_Decompose);

void BM_FindTransition(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            find_transition(kElliptic, SweptParameter::phi2, {-2.0, 0.0}));
    }
}
BENCHMARK(BM_FindTransition);

}  // namespace

BENCHMARK_MAIN();
