#include "ghcs/phase.hpp"
#include "ghcs/specfun.hpp"
#include "ghcs/weights.hpp"

#include <benchmark/benchmark.h>

namespace {

using ghcs::ParameterSet;

void BM_PfqPlane(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ghcs::specfun::pfq({2.0}, {4.0, 1.5}, x).value);
}
BENCHMARK(BM_PfqPlane)->Arg(1)->Arg(10)->Arg(100);

void BM_PfqUnitCircle(benchmark::State& state) {
    ghcs::SeriesOptions opts;
    opts.use_closed_forms = false;
    for (auto _ : state) benchmark::DoNotOptimize(ghcs::specfun::pfq({0.3, 0.4}, {1.5}, 1.0, opts).value);
}
BENCHMARK(BM_PfqUnitCircle);

void BM_BesselK(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(ghcs::specfun::bessel_k(0.7, x));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(19)->Arg(21)->Arg(200);

void BM_MomentCheck(benchmark::State& state) {
    const ParameterSet p = ParameterSet::make_real({}, {1.0});
    for (auto _ : state) benchmark::DoNotOptimize(ghcs::moment_check(ghcs::Family::F01, p, 20).max_rel_error);
}
BENCHMARK(BM_MomentCheck)->Unit(benchmark::kMillisecond);

void BM_PhaseDistribution(benchmark::State& state) {
    const ParameterSet cs = ParameterSet::make({}, {});
    const auto signal = ghcs::fock_vector({cs, std::polar(static_cast<double>(state.range(0)), 0.4)});
    const auto analyzer = ghcs::Analyzer::general(ParameterSet::make_real({2.0}, {4.0}));
    for (auto _ : state) benchmark::DoNotOptimize(ghcs::phase_distribution(signal, analyzer).values.data());
    state.counters["cutoff"] = static_cast<double>(signal.cutoff());
}
BENCHMARK(BM_PhaseDistribution)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
