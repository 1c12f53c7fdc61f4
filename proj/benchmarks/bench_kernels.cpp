#include <benchmark/benchmark.h>

#include <random>

#include "entnet/dmnet.hpp"
#include "entnet/entmeas.hpp"
#include "entnet/linalg.hpp"
#include "entnet/runner.hpp"

namespace {

using entnet::linalg::CMatrix;
using entnet::linalg::Complex;

CMatrix random_hermitian(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = Complex{g(rng), g(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_EigHermitian(benchmark::State& state) {
  const CMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(entnet::linalg::eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16)->Arg(64);

void BM_PartialTrace(benchmark::State& state) {
  const CMatrix rho = random_hermitian(64);
  const int keep[] = {1, 5};
  for (auto _ : state) benchmark::DoNotOptimize(entnet::linalg::partial_trace(rho, 6, keep));
}
BENCHMARK(BM_PartialTrace);

void BM_Concurrence(benchmark::State& state) {
  const entnet::qstate::BellKind pairs[] = {entnet::qstate::BellKind::phi_plus,
                                            entnet::qstate::BellKind::phi_plus};
  const auto net = entnet::dmnet::evolve(entnet::dmnet::initial_network(pairs),
                                         entnet::dmnet::DMCoupling::along(entnet::qstate::Axis::x, 0.2, 2, 3), 1.3);
  const auto rho = entnet::dmnet::reduced(net, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(entnet::entmeas::concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_Fig2Sweep(benchmark::State& state) {
  const entnet::runner::Overrides overrides{{"method", state.range(0) ? "analytic" : "oracle"}};
  for (auto _ : state) benchmark::DoNotOptimize(entnet::runner::run_figure(entnet::runner::Preset::fig2, overrides));
}
BENCHMARK(BM_Fig2Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
