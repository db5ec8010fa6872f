#include "pst/closedform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pst/error.hpp"
#include "pst/graph.hpp"

namespace pst::closedform {

using namespace std::complex_literals;

std::complex<double> pair_evolution_amplitude_backward(double t, bool same_site) {
  return same_site ? std::complex<double>(std::cos(t), 0.0)
                   : std::complex<double>(0.0, std::sin(t));
}

std::complex<double> pair_evolution_amplitude(double t, bool same_site) {
  return std::conj(pair_evolution_amplitude_backward(t, same_site));
}

std::complex<double> fc_evolution_amplitude(int n, double t, int from, int to) {
  if (n < 2) throw InvalidArgument("complete graph evolution needs n >= 2");
  if (from < 1 || from > n || to < 1 || to > n) throw InvalidArgument("vertex out of range");
  const double delta = from == to ? 1.0 : 0.0;
  const double nn = static_cast<double>(n);
  return std::polar(1.0, t) * (delta + (std::polar(1.0, -nn * t) - 1.0) / nn);
}

std::complex<double> cpg_evolution_amplitude(int n, double t, int from, int to) {
  // exp(+i H_pair t) only links `to` with itself and its opposite.
  const int across = opposite(to, n);
  return pair_evolution_amplitude_backward(t, true) * fc_evolution_amplitude(n, t, from, to) +
         pair_evolution_amplitude_backward(t, false) * fc_evolution_amplitude(n, t, from, across);
}

double cpg_squared_fidelity_half_pi(int n) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidArgument("cross polytope fidelity needs even n >= 4, got " + std::to_string(n));
  }
  const double nn = static_cast<double>(n);
  // cos(n pi / 2) is exactly +1 or -1 for even n.
  const double cos_term = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  return 1.0 - (2.0 / nn) * (1.0 - 1.0 / nn) * (1.0 - cos_term);
}

Report report(int n, int time_count) {
  Report r;
  r.n = n;
  r.squared_fidelity_at_half_pi = cpg_squared_fidelity_half_pi(n);
  r.pst_possible = n % 4 == 0;
  if (r.pst_possible) {
    for (int m = 0; m < time_count; ++m) r.pst_times.push_back(std::numbers::pi / 2 + m * std::numbers::pi);
  }
  return r;
}

}  // namespace pst::closedform
