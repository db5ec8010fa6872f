#include "pst/dynamics.hpp"

#include <algorithm>
#include <exception>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pst/error.hpp"
#include "pst/parallel.hpp"

namespace pst {

Hamiltonian::Hamiltonian(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw InvalidArgument("Hamiltonian must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw InvalidArgument("Hamiltonian has non-finite entries");
  if (entries_ != entries_.transpose()) throw InvalidArgument("Hamiltonian must be symmetric");
}

Hamiltonian hamiltonian(const Graph& g, std::span<const double> omegas, double j_scale) {
  const int n = g.size();
  if (!omegas.empty() && omegas.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("omegas has " + std::to_string(omegas.size()) + " entries, graph has " +
                          std::to_string(n) + " vertices");
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, w] : g.edges()) {
    h(key.first - 1, key.second - 1) = j_scale * w;
    h(key.second - 1, key.first - 1) = j_scale * w;
  }
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = omegas[k];
  }
  return Hamiltonian(std::move(h));
}

Hamiltonian shifted(const Hamiltonian& h, double c) {
  Eigen::MatrixXd m = h.matrix();
  m.diagonal().array() += c;
  return Hamiltonian(std::move(m));
}

Spectrum::Spectrum(Eigen::VectorXd eigenvalues, Eigen::MatrixXd eigenvectors)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)) {
  if (vectors_.rows() != values_.size() || vectors_.cols() != values_.size()) {
    throw InvalidArgument("spectrum dimensions disagree");
  }
}

Spectrum spectral_decompose(const Hamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  if (!solver.eigenvalues().allFinite() || !solver.eigenvectors().allFinite()) {
    throw NumericalError("symmetric eigensolver produced non-finite output");
  }
  return Spectrum(solver.eigenvalues(), solver.eigenvectors());
}

std::complex<double> transfer_amplitude(const Spectrum& s, double t, int from, int to) {
  const int n = s.size();
  if (from < 1 || from > n || to < 1 || to > n) throw InvalidArgument("vertex out of range");
  const auto& v = s.eigenvectors();
  const auto& lambda = s.eigenvalues();
  double re = 0.0;
  double im = 0.0;
  for (int m = 0; m < n; ++m) {
    const double w = v(to - 1, m) * v(from - 1, m);
    re += w * std::cos(lambda[m] * t);
    im -= w * std::sin(lambda[m] * t);
  }
  return {re, im};
}

Eigen::MatrixXcd evolution_operator(const Spectrum& s, double t) {
  const Eigen::MatrixXcd v = s.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd phases(s.size());
  for (int m = 0; m < s.size(); ++m) {
    phases[m] = std::polar(1.0, -s.eigenvalues()[m] * t);
  }
  return v * phases.asDiagonal() * v.transpose();
}

double fidelity(const Spectrum& s, double t, int j) {
  return std::abs(transfer_amplitude(s, t, j, opposite(j, s.size())));
}

double squared_fidelity(const Spectrum& s, double t, int j) {
  return std::norm(transfer_amplitude(s, t, j, opposite(j, s.size())));
}

int default_steps(double t_max) {
  return std::max(2, static_cast<int>(std::ceil(t_max * kStepsPerUnitTime)) + 1);
}

namespace {

constexpr std::size_t kMaxRefinedCandidates = 256;
// Grid maxima this far below the best grid value are not refined.
constexpr double kCandidateWindow = 1e-3;

FidelityPeak golden_section_max(const TransferModes& modes, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return std::abs(modes.amplitude(t)); };
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kPeakTimeTolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? FidelityPeak{c, fc} : FidelityPeak{d, fd};
}

void validate_window(double t_max, int steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("t_max must be positive");
  if (steps < 2) throw InvalidArgument("steps must be at least 2");
}

}  // namespace

FidelityPeak locate_peak(const TransferModes& modes, double dt, std::span<const double> values) {
  const std::size_t count = values.size();
  if (count == 0) throw InvalidArgument("empty fidelity grid");
  const double grid_max = *std::max_element(values.begin(), values.end());

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < count; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == count || values[i] >= values[i + 1];
    if (left_ok && right_ok && values[i] >= grid_max - kCandidateWindow) candidates.push_back(i);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (candidates.size() > kMaxRefinedCandidates) candidates.resize(kMaxRefinedCandidates);

  std::vector<FidelityPeak> refined;
  refined.reserve(candidates.size());
  for (std::size_t i : candidates) {
    const double t_i = static_cast<double>(i) * dt;
    const double lo = i == 0 ? t_i : t_i - dt;
    const double hi = i + 1 == count ? t_i : t_i + dt;
    FidelityPeak grid_point{t_i, values[i]};
    if (hi > lo) {
      const FidelityPeak p = golden_section_max(modes, lo, hi);
      refined.push_back(p.f > grid_point.f ? p : grid_point);
    } else {
      refined.push_back(grid_point);
    }
  }

  double best = 0.0;
  for (const auto& p : refined) best = std::max(best, p.f);
  FidelityPeak chosen{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& p : refined) {
    if (p.f >= best - kPeakTieTolerance && p.t < chosen.t) chosen = p;
  }
  return chosen;
}

FidelitySeries fidelity_series(const Spectrum& s, double t_max, int steps, int j) {
  validate_window(t_max, steps);
  const auto modes = transfer_modes(s, j, opposite(j, s.size()));
  const double dt = t_max / (steps - 1);

  FidelitySeries series;
  series.times.resize(static_cast<std::size_t>(steps));
  series.values.resize(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) series.times[static_cast<std::size_t>(i)] = i * dt;
  fidelity_on_grid(modes, dt, series.values);
  series.peak = locate_peak(modes, dt, series.values);
  return series;
}

FidelityPeak max_fidelity(const Spectrum& s, double t_max, int steps, int j) {
  validate_window(t_max, steps);
  const auto modes = transfer_modes(s, j, opposite(j, s.size()));
  const double dt = t_max / (steps - 1);
  std::vector<double> values(static_cast<std::size_t>(steps));
  fidelity_on_grid(modes, dt, values);
  return locate_peak(modes, dt, values);
}

std::vector<SweepRow> connectivity_sweep(int n, double t_max, int steps, int source) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("sweep needs even n");
  validate_window(t_max, steps);
  const int count = n / 2;
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (int c = 1; c <= count; ++c) {
    try {
      const Spectrum s = spectral_decompose(hamiltonian(connectivity_graph(n, c)));
      const FidelityPeak p = max_fidelity(s, t_max, steps, source);
      rows[static_cast<std::size_t>(c - 1)] = SweepRow{c, p.t, p.f};
    } catch (...) {
      errors[static_cast<std::size_t>(c - 1)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace pst
