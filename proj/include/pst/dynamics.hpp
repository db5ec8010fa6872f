#ifndef PST_DYNAMICS_HPP
#define PST_DYNAMICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "pst/graph.hpp"
#include "pst/kernels.hpp"

namespace pst {

/// Real symmetric single-excitation Hamiltonian (hbar = 1).
class Hamiltonian {
 public:
  /// Rejects non-square or non-exactly-symmetric input.
  explicit Hamiltonian(Eigen::MatrixXd entries);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
  /// 1-based access, matching vertex labels.
  double operator()(int k, int l) const { return entries_(k - 1, l - 1); }

 private:
  Eigen::MatrixXd entries_;
};

/// Off-diagonal (k, l) = j_scale * weight(k, l) and diagonal omega_k (0 when
/// omegas is empty).
Hamiltonian hamiltonian(const Graph& g, std::span<const double> omegas = {},
                        double j_scale = 1.0);

/// H + c * Identity.
Hamiltonian shifted(const Hamiltonian& h, double c);

/// Eigenpairs with ascending eigenvalues; column m of eigenvectors() pairs with
/// eigenvalues()[m].
class Spectrum {
 public:
  Spectrum(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

 private:
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
};

Spectrum spectral_decompose(const Hamiltonian& h);

/// <to| exp(-i H t) |from>, 1-based vertices.
std::complex<double> transfer_amplitude(const Spectrum& s, double t, int from, int to);

/// Full propagator exp(-i H t) as a dense complex matrix.
Eigen::MatrixXcd evolution_operator(const Spectrum& s, double t);

/// F(t) = |<opposite(j)| exp(-iHt) |j>|. Throws InvalidArgument for odd n.
double fidelity(const Spectrum& s, double t, int j);
/// F(t)^2, the squared-magnitude convention.
double squared_fidelity(const Spectrum& s, double t, int j);

struct FidelityPeak {
  double t = 0.0;
  double f = 0.0;
};

struct FidelitySeries {
  std::vector<double> times;
  std::vector<double> values;
  FidelityPeak peak;
};

inline constexpr int kStepsPerUnitTime = 2000;
inline constexpr double kPeakTimeTolerance = 1e-10;
// Refined peaks whose fidelity is this close to the best are considered tied;
// the earliest one wins.
inline constexpr double kPeakTieTolerance = 1e-9;

/// Default grid count for a window, kStepsPerUnitTime per unit time.
int default_steps(double t_max);

/// Uniform grid of `steps` points on [0, t_max], peak refined by golden
/// section around the best grid maxima.
FidelitySeries fidelity_series(const Spectrum& s, double t_max, int steps, int j);
FidelityPeak max_fidelity(const Spectrum& s, double t_max, int steps, int j);

/// Peak search over precomputed samples of an amplitude. `dt` is the uniform
/// grid spacing of `values`.
FidelityPeak locate_peak(const TransferModes& modes, double dt,
                         std::span<const double> values);

struct SweepRow {
  int c = 0;
  double t_peak = 0.0;
  double f_peak = 0.0;
};

/// max_fidelity of connectivity_graph(n, c) for c = 1..n/2, in order of c.
std::vector<SweepRow> connectivity_sweep(int n, double t_max, int steps, int source = 1);

}  // namespace pst

#endif  // PST_DYNAMICS_HPP
