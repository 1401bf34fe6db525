#include <benchmark/benchmark.h>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/geodesic.hpp"
#include "dsgeo/isometry.hpp"
#include "dsgeo/tensor.hpp"

using namespace dsgeo;

namespace {

Vec static_point() {
  Vec p(4);
  p << 0.2, 0.5, 1.1, 0.7;
  return p;
}

void BM_EmbedStatic(benchmark::State& state) {
  const Chart c = make_chart("static-47-corrected", 1.0);
  const Vec p = static_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(c, p));
  }
}
BENCHMARK(BM_EmbedStatic);

void BM_PullbackMetricFd(benchmark::State& state) {
  const Chart c = make_chart("static-47-corrected", 1.0);
  const Vec p = static_point();
  const StepPolicy pol;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pullback_metric(c, p, pol, /*force_fd=*/true));
  }
}
BENCHMARK(BM_PullbackMetricFd);

void BM_Christoffel(benchmark::State& state) {
  const MetricField f = static_model_field(1.0);
  const Vec p = static_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(christoffel(f, p));
  }
}
BENCHMARK(BM_Christoffel);

void BM_RiemannCurvature(benchmark::State& state) {
  const MetricField f = static_model_field(1.0);
  const Vec p = static_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_curvature(f, p));
  }
}
BENCHMARK(BM_RiemannCurvature);

void BM_PullbackSolve(benchmark::State& state) {
  const Chart c = make_chart("static-47-corrected", 1.0);
  const auto gens = ambient_generators(Quadric(Signature::minus_first(5), 1.0));
  const Vec p = static_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pullback_at(c, [&](const Vec& xi) { return gens[3](xi); }, p));
  }
}
BENCHMARK(BM_PullbackSolve);

void BM_Rk4Step(benchmark::State& state) {
  const MetricField f = static_model_field(1.0);
  GeodesicState s0;
  s0.x = static_point();
  Vec v(4);
  v << 1.0, 0.05, 0.1, -0.2;
  s0.v = v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(f, s0, 1e-3, 1e-3));
  }
}
BENCHMARK(BM_Rk4Step);

}  // namespace

BENCHMARK_MAIN();
