#include "pst/export.hpp"

#include <fmt/format.h>

#include <ostream>

namespace pst {

void write_series_csv(std::ostream& os, const FidelitySeries& series) {
  os << "t,fidelity\n";
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    os << fmt::format("{:.17g},{:.17g}\n", series.times[i], series.values[i]);
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "c,t_peak,f_peak\n";
  for (const auto& r : rows) os << fmt::format("{},{:.17g},{:.17g}\n", r.c, r.t_peak, r.f_peak);
}

void write_trials_csv(std::ostream& os, const DisorderStats& stats) {
  os << "trial,t_peak,f_peak\n";
  for (const auto& r : stats.per_trial) {
    os << fmt::format("{},{:.17g},{:.17g}\n", r.trial, r.t_peak, r.f_peak);
  }
}

void write_scaling_csv(std::ostream& os, const std::vector<babinet::ScalingRow>& rows) {
  os << "n,coupling_norm,max_discrepancy\n";
  for (const auto& r : rows) {
    os << fmt::format("{},{:.17g},{:.17g}\n", r.n, r.coupling_norm, r.max_discrepancy);
  }
}

nlohmann::json peak_json(const FidelityPeak& peak) {
  return {{"t_peak", peak.t}, {"f_peak", peak.f}};
}

nlohmann::json stats_json(const DisorderStats& stats) {
  const auto& c = stats.config;
  return {{"n", c.n},         {"delta", c.delta},   {"broken", c.broken},
          {"trials", c.trials}, {"seed", c.master_seed}, {"mean", stats.mean},
          {"std", stats.std},  {"min", stats.min},     {"max", stats.max},
          {"failures", stats.failures}};
}

nlohmann::json report_json(const closedform::Report& report) {
  return {{"n", report.n},
          {"pst_possible", report.pst_possible},
          {"pst_times", report.pst_times},
          {"squared_fidelity_at_half_pi", report.squared_fidelity_at_half_pi}};
}

}  // namespace pst
