#ifndef PST_EXPORT_HPP
#define PST_EXPORT_HPP

#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "pst/babinet.hpp"
#include "pst/closedform.hpp"
#include "pst/disorder.hpp"
#include "pst/dynamics.hpp"

namespace pst {

// CSV writers emit a fixed header and 17 significant digits per value.

void write_series_csv(std::ostream& os, const FidelitySeries& series);          // t,fidelity
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);      // c,t_peak,f_peak
void write_trials_csv(std::ostream& os, const DisorderStats& stats);            // trial,t_peak,f_peak
void write_scaling_csv(std::ostream& os, const std::vector<babinet::ScalingRow>& rows);  // n,coupling_norm,max_discrepancy

nlohmann::json peak_json(const FidelityPeak& peak);
nlohmann::json stats_json(const DisorderStats& stats);
nlohmann::json report_json(const closedform::Report& report);

}  // namespace pst

#endif  // PST_EXPORT_HPP
