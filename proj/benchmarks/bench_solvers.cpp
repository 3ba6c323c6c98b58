#include <benchmark/benchmark.h>

#include "swepc/cases.hpp"
#include "swepc/stochastic.hpp"

using namespace swepc;

static void BM_RoeFlux(benchmark::State& state) {
  const PhysicsConstants phys;
  const FlowVector left{1.2, 1.65};
  const FlowVector right{0.8, 1.6};
  for (auto _ : state) benchmark::DoNotOptimize(roeFlux(left, right, phys));
}
BENCHMARK(BM_RoeFlux);

static void BM_DeterministicStep(benchmark::State& state) {
  const auto spec = builtinCase(CaseId::CriticalSteadyState);
  const auto cfg = spec.config();
  auto field = initialDeterministicField(spec, 0.6);
  for (auto _ : state) {
    field = step(field, spec.boundary, cfg);
    benchmark::DoNotOptimize(field.flow.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.mesh.cells));
}
BENCHMARK(BM_DeterministicStep);

// Args: basis order, flux cache on/off.
static void BM_SgStep(benchmark::State& state) {
  const auto spec = builtinCase(CaseId::CriticalSteadyState);
  const auto cfg = spec.config();
  SgOptions opts;
  opts.fluxCache = state.range(1) != 0;
  SgScheme scheme(static_cast<int>(state.range(0)), opts);
  auto field = initialStochasticField(spec, scheme.order());
  for (auto _ : state) {
    field = sgStep(field, scheme, spec.boundary, cfg);
    benchmark::DoNotOptimize(field.depth.data());
  }
  state.counters["riemann/step"] =
      static_cast<double>(scheme.riemannCalls()) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_SgStep)->ArgsProduct({{1, 2, 3}, {1, 0}})->ArgNames({"P", "cache"});

BENCHMARK_MAIN();
