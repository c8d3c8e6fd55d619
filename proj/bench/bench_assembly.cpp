// Serial reference assembly against the OpenMP element loops.
//   qge_bench_assembly --benchmark_filter=Biharmonic

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "qge/forms.hpp"
#include "qge/manufactured.hpp"

namespace {

using namespace qge;

// Arg: 1/h.
const Discretization& disc_for(int n) {
  static std::map<int, std::shared_ptr<const Discretization>> cache;
  auto& d = cache[n];
  if (!d) d = make_discretization(generate_rect_mesh(Rectangle::unit_square(), 1.0 / n));
  return *d;
}

const FlowParams kParams{1.0, 1.0};

void BM_BiharmonicReference(benchmark::State& state) {
  const Discretization& d = disc_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_biharmonic(d, kParams));
  state.counters["dofs"] = d.num_free();
}

void BM_BiharmonicParallel(benchmark::State& state) {
  const Discretization& d = disc_for(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_biharmonic(d, kParams, {workers}));
  state.counters["dofs"] = d.num_free();
}

void BM_LoadReference(benchmark::State& state) {
  const Discretization& d = disc_for(static_cast<int>(state.range(0)));
  const ScalarField f = forcing_field(sine_squared_solution(), kParams);
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_load(d, f, kParams));
}

void BM_LoadParallel(benchmark::State& state) {
  const Discretization& d = disc_for(static_cast<int>(state.range(0)));
  const ScalarField f = forcing_field(sine_squared_solution(), kParams);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_load(d, f, kParams, {workers}));
}

std::shared_ptr<const Discretization> shared_disc(int n) {
  return make_discretization(generate_rect_mesh(Rectangle::unit_square(), 1.0 / n));
}

void BM_NewtonReference(benchmark::State& state) {
  auto d = shared_disc(static_cast<int>(state.range(0)));
  const ManufacturedSolution s = sine_squared_solution();
  const Solution psi = Solution::interpolate(d, [&s](Point2 p) { return s.jet(p); });
  const SparseOperator a = assemble_biharmonic(*d, kParams), c = assemble_beta(*d, kParams);
  const Eigen::VectorXd l = Eigen::VectorXd::Zero(d->num_free());
  for (auto _ : state) benchmark::DoNotOptimize(reference::newton_system(psi, a, c, l));
}

void BM_NewtonParallel(benchmark::State& state) {
  auto d = shared_disc(static_cast<int>(state.range(0)));
  const ManufacturedSolution s = sine_squared_solution();
  const Solution psi = Solution::interpolate(d, [&s](Point2 p) { return s.jet(p); });
  const SparseOperator a = assemble_biharmonic(*d, kParams), c = assemble_beta(*d, kParams);
  const Eigen::VectorXd l = Eigen::VectorXd::Zero(d->num_free());
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(newton_system(psi, a, c, l, {workers}));
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max = std::max(4, omp_get_max_threads());
  for (int n : {16, 32, 64}) {
    for (int w = 1; w <= max; w *= 2) b->Args({n, w});
    if ((max & (max - 1)) != 0) b->Args({n, max});
  }
}

}  // namespace

BENCHMARK(BM_BiharmonicReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BiharmonicParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LoadReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LoadParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NewtonReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
