#include <benchmark/benchmark.h>

#include "pst/disorder.hpp"
#include "pst/dynamics.hpp"
#include "pst/kernels.hpp"
#include "pst/parallel.hpp"

namespace {

pst::TransferModes disordered_modes(int n) {
  const auto s = pst::spectral_decompose(pst::hamiltonian(pst::perturb_couplings(pst::cross_polytope(n), 0.02, 1)));
  return pst::transfer_modes(s, 1, pst::opposite(1, n));
}

void BM_FidelityGridSerial(benchmark::State& state) {
  const auto modes = disordered_modes(static_cast<int>(state.range(0)));
  const std::size_t count = 20001;
  std::vector<double> times(count), out(count);
  for (std::size_t i = 0; i < count; ++i) times[i] = static_cast<double>(i) * 5e-4;
  for (auto _ : state) {
    pst::serial::fidelity_on_grid(modes, times, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FidelityGridSerial)->Arg(40)->Arg(200);

void BM_FidelityGridParallel(benchmark::State& state) {
  const auto modes = disordered_modes(static_cast<int>(state.range(0)));
  std::vector<double> out(20001);
  for (auto _ : state) {
    pst::fidelity_on_grid(modes, 5e-4, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FidelityGridParallel)->Arg(40)->Arg(200);

void BM_DisorderTrials(benchmark::State& state) {
  pst::DisorderConfig cfg;
  cfg.n = 40;
  cfg.trials = 10;
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto stats = parallel ? pst::run_trials(cfg) : pst::serial::run_trials(cfg);
    benchmark::DoNotOptimize(stats.mean);
  }
}
BENCHMARK(BM_DisorderTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
