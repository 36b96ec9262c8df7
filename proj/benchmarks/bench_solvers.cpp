#include <benchmark/benchmark.h>

#include <numbers>

#include "lgidecay/correlators.hpp"
#include "lgidecay/oracle.hpp"

using namespace lgidecay;

namespace {

const LorentzianSpectrum kSpec{0.5, 5.0, 0.0, 1.0};
const QubitState kHalf{Complex(1.0 / std::numbers::sqrt2), Complex(1.0 / std::numbers::sqrt2)};

void BM_PropagatorAnalytic(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator_analytic(kSpec, t));
        t += 1e-3;
        if (t > 10.0)
            t = 0.0;
    }
}
BENCHMARK(BM_PropagatorAnalytic);

void BM_PropagatorOde(benchmark::State& state) {
    SolverConfig cfg{1e-3, static_cast<double>(state.range(0)), SolverMethod::OdeReduction};
    for (auto _ : state)
        benchmark::DoNotOptimize(propagator_ode(kSpec, cfg));
}
BENCHMARK(BM_PropagatorOde)->Arg(1)->Arg(10);

void BM_PropagatorVolterra(benchmark::State& state) {
    SolverConfig cfg{1e-3, static_cast<double>(state.range(0)), SolverMethod::VolterraTrapezoid};
    auto kernel = [](double s) { return memory_kernel(kSpec, s); };
    for (auto _ : state)
        benchmark::DoNotOptimize(propagator_volterra(kernel, cfg));
}
BENCHMARK(BM_PropagatorVolterra)->Arg(1)->Arg(10);

void BM_ViolationScan(benchmark::State& state) {
    const auto grid = default_tau_grid(1.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(violation_scan(kHalf, kSpec, 0.0, grid, 4));
}
BENCHMARK(BM_ViolationScan)->Arg(100)->Arg(400);

void BM_OracleEvolve(benchmark::State& state) {
    const auto bath = discretize(kSpec, static_cast<std::size_t>(state.range(0)), 100.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve_c1_trajectory(bath, kHalf, 1.0, 1e-3));
}
BENCHMARK(BM_OracleEvolve)->Arg(200)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
