// Serial reference versus OpenMP path for the hot kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "lplab/homotopy_lab.hpp"
#include "lplab/kernels.hpp"
#include "lplab/lp_complex.hpp"

using namespace lplab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

std::vector<double> random_values(std::size_t n) {
  Rng rng(1);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform_real(-1.0, 1.0);
  return v;
}

void BM_PowerSum(benchmark::State& state) {
  const auto v = random_values(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::power_sum(v, 1.5, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_PowerSum)->ArgsProduct({{0, 1}, {1 << 12, 1 << 20}});

void BM_Dot(benchmark::State& state) {
  const auto a = random_values(static_cast<std::size_t>(state.range(1)));
  const auto b = random_values(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dot(a, b, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Dot)->ArgsProduct({{0, 1}, {1 << 12, 1 << 20}});

void BM_AssembleBoundary(benchmark::State& state) {
  const auto res = make_resolution("fox:heisenberg");
  const auto R = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_boundary(res, 2, R, 2.0, exec_of(state)).matrix.data());
}
BENCHMARK(BM_AssembleBoundary)->ArgsProduct({{0, 1}, {3, 5}})->Unit(benchmark::kMillisecond);

void BM_HomotopyResidual(benchmark::State& state) {
  const auto H = Group::make("heisenberg");
  Rng rng(2);
  const auto phi = EquivariantCochain::random(H, 2, 3, rng);
  const Element z{{0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_residual(phi, z, exec_of(state)).tuples_checked);
}
BENCHMARK(BM_HomotopyResidual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
