#ifndef PST_DISORDER_HPP
#define PST_DISORDER_HPP

#include <cstdint>
#include <vector>

namespace pst {

class Graph;

/// Monte-Carlo setup for cross-polytope networks with coupling disorder and
/// randomly broken bonds.
struct DisorderConfig {
  int n = 40;
  double delta = 0.02;   // couplings uniform on [1 - delta, 1 + delta]
  double broken = 0.0;   // fraction of edges removed
  int trials = 100;
  std::uint64_t master_seed = 42;
  double t_max = 10.0;
  int steps = 0;         // 0 selects default_steps(t_max)
  int source = 1;

  void validate() const;
  int grid_steps() const;
};

struct TrialResult {
  int trial = 0;
  double t_peak = 0.0;
  double f_peak = 0.0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct DisorderStats {
  DisorderConfig config;
  std::vector<TrialResult> per_trial;  // sorted by trial index
  int failures = 0;                    // trials dropped after eigensolver failure
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single trial
  double min = 0.0;
  double max = 0.0;
};

/// The network realized for trial `index`: cross_polytope(n), couplings
/// perturbed with one derived stream, bonds broken with another.
Graph trial_graph(const DisorderConfig& cfg, int index);

/// Summary statistics over per_trial; order-independent.
DisorderStats summarize(const DisorderConfig& cfg, std::vector<TrialResult> per_trial, int failures);

/// OpenMP over trials. Bitwise identical to the serial version for any thread
/// count.
DisorderStats run_trials(const DisorderConfig& cfg);

namespace serial {
DisorderStats run_trials(const DisorderConfig& cfg);
}

std::vector<DisorderStats> sweep_delta(const DisorderConfig& cfg, const std::vector<double>& deltas);
std::vector<DisorderStats> sweep_broken(const DisorderConfig& cfg, const std::vector<double>& ratios);

}  // namespace pst

#endif  // PST_DISORDER_HPP
