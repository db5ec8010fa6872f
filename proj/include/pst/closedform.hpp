#ifndef PST_CLOSEDFORM_HPP
#define PST_CLOSEDFORM_HPP

#include <complex>
#include <vector>

namespace pst::closedform {

// Analytic evolutions for the pair-matching, complete and cross-polytope
// Hamiltonians. All amplitudes are for forward evolution exp(-iHt) unless a
// function says otherwise.

/// <site| exp(+i H_pair t) |site'>: cos t on-site, i sin t to the opposite
/// site. `same_site` selects which.
std::complex<double> pair_evolution_amplitude_backward(double t, bool same_site);
/// Forward evolution exp(-i H_pair t); the conjugate of the above.
std::complex<double> pair_evolution_amplitude(double t, bool same_site);

/// <to| exp(-i H_fc t) |from> = e^{it} [delta + (e^{-iNt} - 1) / N].
std::complex<double> fc_evolution_amplitude(int n, double t, int from, int to);

/// <to| exp(-i H_CPG t) |from> via exp(+i H_pair t) exp(-i H_fc t).
std::complex<double> cpg_evolution_amplitude(int n, double t, int from, int to);

/// 1 - (2/N)(1 - 1/N)(1 - cos(N pi / 2)), the squared transfer fidelity of the
/// cross polytope at t = pi/2. Requires even n >= 4.
double cpg_squared_fidelity_half_pi(int n);

struct Report {
  int n = 0;
  bool pst_possible = false;
  std::vector<double> pst_times;
  double squared_fidelity_at_half_pi = 0.0;
};

/// PST holds iff n % 4 == 0, at t = pi/2 + m pi; the first `time_count` such
/// times are listed.
Report report(int n, int time_count = 4);

}  // namespace pst::closedform

#endif  // PST_CLOSEDFORM_HPP
