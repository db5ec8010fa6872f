#include "pst/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/parallel.hpp"

namespace pst {

namespace {

// Eigenvalues closer than this (relative to the spectral radius) are merged.
constexpr double kDegeneracyTolerance = 64 * std::numeric_limits<double>::epsilon();
constexpr double kNegligibleWeight = 1e-15;
// Below this many points the grid is evaluated on the calling thread.
constexpr std::size_t kParallelThreshold = 4096;

}  // namespace

std::complex<double> TransferModes::amplitude(double t) const {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t m = 0; m < frequencies.size(); ++m) {
    const double phase = frequencies[m] * t;
    re += weights[m] * std::cos(phase);
    im -= weights[m] * std::sin(phase);
  }
  return {re, im};
}

TransferModes transfer_modes(const Spectrum& s, int from, int to) {
  const int n = s.size();
  if (from < 1 || from > n || to < 1 || to > n) throw InvalidArgument("vertex out of range");
  const auto& values = s.eigenvalues();
  const auto& vectors = s.eigenvectors();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double tol = kDegeneracyTolerance * scale;

  TransferModes modes;
  int m = 0;
  while (m < n) {
    int end = m;
    double weight = 0.0;
    double freq_sum = 0.0;
    while (end < n && values[end] - values[m] <= tol) {
      weight += vectors(to - 1, end) * vectors(from - 1, end);
      freq_sum += values[end];
      ++end;
    }
    if (std::abs(weight) > kNegligibleWeight) {
      modes.frequencies.push_back(freq_sum / (end - m));
      modes.weights.push_back(weight);
    }
    m = end;
  }
  return modes;
}

namespace serial {

void fidelity_on_grid(const TransferModes& modes, std::span<const double> times,
                      std::span<double> out) {
  if (times.size() != out.size()) throw InvalidArgument("time grid and output differ in size");
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = std::abs(modes.amplitude(times[i]));
}

}  // namespace serial

void fidelity_on_grid(const TransferModes& modes, double dt, std::span<double> out) {
  const std::size_t count = out.size();
  const std::size_t n_modes = modes.frequencies.size();
  const std::size_t chunks = (count + kPhaseChunk - 1) / kPhaseChunk;
  const int threads = count < kParallelThreshold || omp_in_parallel() ? 1 : thread_limit();

#pragma omp parallel num_threads(threads)
  {
    std::vector<double> step_re(n_modes), step_im(n_modes);
    std::vector<double> re(n_modes), im(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
      step_re[m] = std::cos(modes.frequencies[m] * dt);
      step_im[m] = -std::sin(modes.frequencies[m] * dt);
    }

#pragma omp for schedule(static)
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = c * kPhaseChunk;
      const std::size_t end = std::min(count, begin + kPhaseChunk);
      const double t0 = static_cast<double>(begin) * dt;
      for (std::size_t m = 0; m < n_modes; ++m) {
        const double phase = modes.frequencies[m] * t0;
        re[m] = modes.weights[m] * std::cos(phase);
        im[m] = -modes.weights[m] * std::sin(phase);
      }
      for (std::size_t i = begin; i < end; ++i) {
        double sum_re = 0.0;
        double sum_im = 0.0;
        for (std::size_t m = 0; m < n_modes; ++m) {
          sum_re += re[m];
          sum_im += im[m];
          const double r = re[m] * step_re[m] - im[m] * step_im[m];
          im[m] = re[m] * step_im[m] + im[m] * step_re[m];
          re[m] = r;
        }
        out[i] = std::sqrt(sum_re * sum_re + sum_im * sum_im);
      }
    }
  }
}

}  // namespace pst
