#include <benchmark/benchmark.h>

#include <numbers>

#include "anchorfp/anchorfp.hpp"

using namespace anchorfp;

namespace {

Operator box_projection(int dim) {
  return make_projection_operator(
      ConvexSet::box(Point::zeros(dim), Point::constant(dim, 1.0)),
      ConvexSet::whole_space(dim));
}

void BM_ProjectBall(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ConvexSet ball = ConvexSet::ball(Point::zeros(dim), 1.0);
  const Point x = Point::constant(dim, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball.project(x));
  }
}
BENCHMARK(BM_ProjectBall)->Arg(2)->Arg(10)->Arg(100);

void BM_ProjectBox(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ConvexSet box = ConvexSet::box(Point::zeros(dim), Point::constant(dim, 1.0));
  const Point x = Point::constant(dim, 1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(box.project(x));
  }
}
BENCHMARK(BM_ProjectBox)->Arg(2)->Arg(10)->Arg(100);

void BM_HalpernBoxProjection(benchmark::State& state) {
  const int dim = 5;
  const Operator proj = box_projection(dim);
  SolverConfig cfg{
      .anchor = Point::constant(dim, 2.0),
      .start = Point::constant(dim, -1.0),
      .alpha = Schedule::harmonic(1, 1),
      .beta = Schedule::constant(0.5),
      .max_iters = state.range(0),
      .trace_stride = state.range(0),
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(halpern(proj, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HalpernBoxProjection)->Arg(1000)->Arg(10000);

void BM_BlendedScheme(benchmark::State& state) {
  const int dim = 5;
  const Operator T = box_projection(dim);
  const Operator S = make_projection_operator(
      ConvexSet::box(Point::constant(dim, 0.5), Point::constant(dim, 1.5)),
      ConvexSet::whole_space(dim));
  SolverConfig cfg{
      .anchor = Point::constant(dim, 2.0),
      .start = Point::constant(dim, -1.0),
      .alpha = Schedule::harmonic(1, 1),
      .beta = Schedule::constant(0.5),
      .max_iters = state.range(0),
      .trace_stride = state.range(0),
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(blended_halpern(T, S, cfg, SchemeCase::Common));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BlendedScheme)->Arg(1000)->Arg(10000);

void BM_BrowderPathRotation(benchmark::State& state) {
  const Operator rot = make_rotation_operator(std::numbers::pi / 2,
                                              ConvexSet::ball(Point::zeros(2), 2.0));
  const Point u({1, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(browder_path(rot, u, {0.1, 0.01}, 1e-8));
  }
}
BENCHMARK(BM_BrowderPathRotation);

void BM_CertifyNonexpansive(benchmark::State& state) {
  const Operator proj = make_projection_operator(ConvexSet::ball(Point::zeros(10), 1.0),
                                                 ConvexSet::ball(Point::zeros(10), 3.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_nonexpansive(proj, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CertifyNonexpansive)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
