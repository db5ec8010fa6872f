#include <gtest/gtest.h>

#include <cmath>
#include <iostream>
#include <numbers>

#include "pst/disorder.hpp"
#include "pst/error.hpp"
#include "pst/graph.hpp"
#include "pst/parallel.hpp"

namespace pst {
namespace {

DisorderConfig small_config() {
  DisorderConfig cfg;
  cfg.n = 16;
  cfg.delta = 0.05;
  cfg.trials = 12;
  cfg.t_max = 4.0;
  return cfg;
}

TEST(DisorderConfig, Validation) {
  EXPECT_NO_THROW(DisorderConfig{}.validate());
  auto bad = [](auto mutate) {
    DisorderConfig cfg;
    mutate(cfg);
    return cfg;
  };
  EXPECT_THROW(bad([](auto& c) { c.n = 41; }).validate(), InvalidArgument);
  EXPECT_THROW(bad([](auto& c) { c.delta = 1.2; }).validate(), InvalidArgument);
  EXPECT_THROW(bad([](auto& c) { c.broken = 1.0; }).validate(), InvalidArgument);
  EXPECT_THROW(bad([](auto& c) { c.trials = 0; }).validate(), InvalidArgument);
  EXPECT_THROW(bad([](auto& c) { c.t_max = 0.0; }).validate(), InvalidArgument);
  EXPECT_THROW(bad([](auto& c) { c.source = 0; }).validate(), InvalidArgument);
  EXPECT_THROW(run_trials(bad([](auto& c) { c.trials = -1; })), InvalidArgument);
}

TEST(RunTrials, CleanNetworkTransfersPerfectly) {
  DisorderConfig cfg;
  cfg.n = 40;
  cfg.delta = 0.0;
  cfg.trials = 5;
  const auto stats = run_trials(cfg);
  ASSERT_EQ(stats.per_trial.size(), 5u);
  for (const auto& r : stats.per_trial) {
    EXPECT_GE(r.f_peak, 1.0 - 1e-9);
    EXPECT_NEAR(r.t_peak, std::numbers::pi / 2, 1e-6);
  }
  EXPECT_EQ(stats.failures, 0);
}

TEST(RunTrials, DeterministicAcrossThreadCountsAndSerialReference) {
  DisorderConfig cfg = small_config();
  cfg.broken = 0.05;
  const auto reference = serial::run_trials(cfg);
  for (int threads : {1, 2, 4}) {
    ThreadLimitGuard guard(threads);
    const auto stats = run_trials(cfg);
    EXPECT_EQ(stats.per_trial, reference.per_trial) << threads;
    EXPECT_EQ(stats.mean, reference.mean);
  }
}

TEST(RunTrials, SeedChangesResults) {
  DisorderConfig a = small_config();
  DisorderConfig b = a;
  b.master_seed = 43;
  EXPECT_NE(run_trials(a).per_trial, run_trials(b).per_trial);
}

TEST(RunTrials, StatisticsConsistency) {
  DisorderConfig cfg = small_config();
  cfg.delta = 0.2;
  const auto stats = run_trials(cfg);
  double sum = 0.0;
  double lo = stats.per_trial.front().f_peak;
  double hi = lo;
  for (std::size_t i = 0; i < stats.per_trial.size(); ++i) {
    const auto& r = stats.per_trial[i];
    EXPECT_EQ(r.trial, static_cast<int>(i));
    EXPECT_LE(r.f_peak, 1.0 + 1e-12);
    EXPECT_GE(r.f_peak, 0.0);
    sum += r.f_peak;
    lo = std::min(lo, r.f_peak);
    hi = std::max(hi, r.f_peak);
  }
  const double count = static_cast<double>(stats.per_trial.size());
  const double mean = std::clamp(sum / count, lo, hi);
  double ss = 0.0;
  for (const auto& r : stats.per_trial) ss += (r.f_peak - mean) * (r.f_peak - mean);
  EXPECT_EQ(stats.mean, mean);
  EXPECT_EQ(stats.min, lo);
  EXPECT_EQ(stats.max, hi);
  EXPECT_EQ(stats.std, std::sqrt(ss / (count - 1.0)));
  EXPECT_LE(stats.min, stats.mean);
  EXPECT_LE(stats.mean, stats.max);
}

TEST(Summarize, OrderIndependent) {
  DisorderConfig cfg;
  std::vector<TrialResult> results{{2, 1.0, 0.9}, {0, 1.1, 0.95}, {1, 1.2, 0.7}};
  std::vector<TrialResult> shuffled{{1, 1.2, 0.7}, {2, 1.0, 0.9}, {0, 1.1, 0.95}};
  const auto a = summarize(cfg, results, 0);
  const auto b = summarize(cfg, shuffled, 0);
  EXPECT_EQ(a.per_trial, b.per_trial);
  EXPECT_EQ(a.per_trial.front().trial, 0);
  EXPECT_NEAR(a.mean, (0.9 + 0.95 + 0.7) / 3.0, 1e-15);
  const auto single = summarize(cfg, {{0, 1.0, 0.5}}, 0);
  EXPECT_EQ(single.std, 0.0);
}

TEST(TrialGraph, StreamsAreIndependent) {
  DisorderConfig cfg;
  cfg.n = 20;
  cfg.delta = 0.1;
  const Graph only_disorder = trial_graph(cfg, 3);
  cfg.broken = 0.1;
  const Graph both = trial_graph(cfg, 3);
  EXPECT_EQ(only_disorder.edge_count() - both.edge_count(), broken_bond_count(only_disorder.edge_count(), 0.1));
  for (const auto& [key, w] : both.edges()) EXPECT_EQ(w, only_disorder.weight(key.first, key.second));
  EXPECT_NE(trial_graph(cfg, 3), trial_graph(cfg, 4));
}

TEST(Sweeps, ZeroRowsAreClean) {
  DisorderConfig cfg = small_config();
  cfg.trials = 4;
  const auto deltas = sweep_delta(cfg, {0.0});
  ASSERT_EQ(deltas.size(), 1u);
  EXPECT_NEAR(deltas[0].mean, 1.0, 1e-9);
  cfg.delta = 0.0;
  const auto ratios = sweep_broken(cfg, {0.0, 0.0005});
  ASSERT_EQ(ratios.size(), 2u);
  EXPECT_NEAR(ratios[0].mean, 1.0, 1e-9);
  EXPECT_EQ(ratios[1].config.broken, 0.0005);
}

TEST(Sweeps, DeltaTrendReport) {
  DisorderConfig cfg;
  cfg.trials = 20;
  const auto rows = sweep_delta(cfg, {0.01, 0.02});
  // Soft check: reported, not asserted.
  std::cout << "[trend] n=40 mean f_peak: delta=0.01 -> " << rows[0].mean << ", delta=0.02 -> "
            << rows[1].mean << '\n';
  EXPECT_EQ(rows.size(), 2u);
}

}  // namespace
}  // namespace pst
