#include "pst/disorder.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/graph.hpp"
#include "pst/parallel.hpp"
#include "pst/rng.hpp"

namespace pst {

void DisorderConfig::validate() const {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("disorder: n must be even and >= 4");
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("disorder: delta must lie in [0, 1]");
  if (!(broken >= 0.0 && broken < 1.0)) throw InvalidArgument("disorder: broken ratio must lie in [0, 1)");
  if (trials < 1) throw InvalidArgument("disorder: trials must be positive");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("disorder: t_max must be positive");
  if (steps != 0 && steps < 2) throw InvalidArgument("disorder: steps must be at least 2");
  if (source < 1 || source > n) throw InvalidArgument("disorder: source vertex out of range");
}

int DisorderConfig::grid_steps() const { return steps == 0 ? default_steps(t_max) : steps; }

Graph trial_graph(const DisorderConfig& cfg, int index) {
  const auto i = static_cast<std::uint64_t>(index);
  Graph g = perturb_couplings(cross_polytope(cfg.n), cfg.delta,
                              derive_seed(cfg.master_seed, i, Stream::Couplings));
  if (cfg.broken > 0.0) g = break_bonds(g, cfg.broken, derive_seed(cfg.master_seed, i, Stream::Bonds));
  return g;
}

DisorderStats summarize(const DisorderConfig& cfg, std::vector<TrialResult> per_trial, int failures) {
  std::sort(per_trial.begin(), per_trial.end(),
            [](const TrialResult& a, const TrialResult& b) { return a.trial < b.trial; });
  DisorderStats stats;
  stats.config = cfg;
  stats.failures = failures;
  stats.per_trial = std::move(per_trial);
  if (stats.per_trial.empty()) return stats;

  double sum = 0.0;
  stats.min = stats.per_trial.front().f_peak;
  stats.max = stats.min;
  for (const auto& r : stats.per_trial) {
    sum += r.f_peak;
    stats.min = std::min(stats.min, r.f_peak);
    stats.max = std::max(stats.max, r.f_peak);
  }
  const double count = static_cast<double>(stats.per_trial.size());
  stats.mean = sum / count;
  if (stats.per_trial.size() > 1) {
    double ss = 0.0;
    for (const auto& r : stats.per_trial) ss += (r.f_peak - stats.mean) * (r.f_peak - stats.mean);
    stats.std = std::sqrt(ss / (count - 1.0));
  }
  // The mean of identical values can round outside [min, max] by an ulp.
  stats.mean = std::clamp(stats.mean, stats.min, stats.max);
  return stats;
}

namespace {

std::optional<TrialResult> run_one(const DisorderConfig& cfg, int index) {
  try {
    const Spectrum s = spectral_decompose(hamiltonian(trial_graph(cfg, index)));
    const FidelityPeak p = max_fidelity(s, cfg.t_max, cfg.grid_steps(), cfg.source);
    return TrialResult{index, p.t, p.f};
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

DisorderStats finish(const DisorderConfig& cfg, std::vector<std::optional<TrialResult>> slots) {
  std::vector<TrialResult> results;
  int failures = 0;
  for (auto& s : slots) {
    if (s) {
      results.push_back(*s);
    } else {
      ++failures;
    }
  }
  if (results.empty()) throw NumericalError("disorder: every trial failed in the eigensolver");
  return summarize(cfg, std::move(results), failures);
}

}  // namespace

DisorderStats run_trials(const DisorderConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<TrialResult>> slots(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (int i = 0; i < cfg.trials; ++i) slots[static_cast<std::size_t>(i)] = run_one(cfg, i);
  return finish(cfg, std::move(slots));
}

namespace serial {

DisorderStats run_trials(const DisorderConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<TrialResult>> slots;
  slots.reserve(static_cast<std::size_t>(cfg.trials));
  for (int i = 0; i < cfg.trials; ++i) slots.push_back(run_one(cfg, i));
  return finish(cfg, std::move(slots));
}

}  // namespace serial

std::vector<DisorderStats> sweep_delta(const DisorderConfig& cfg, const std::vector<double>& deltas) {
  std::vector<DisorderStats> out;
  for (double d : deltas) {
    DisorderConfig c = cfg;
    c.delta = d;
    out.push_back(run_trials(c));
  }
  return out;
}

std::vector<DisorderStats> sweep_broken(const DisorderConfig& cfg, const std::vector<double>& ratios) {
  std::vector<DisorderStats> out;
  for (double b : ratios) {
    DisorderConfig c = cfg;
    c.broken = b;
    out.push_back(run_trials(c));
  }
  return out;
}

}  // namespace pst
