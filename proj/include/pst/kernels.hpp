#ifndef PST_KERNELS_HPP
#define PST_KERNELS_HPP

#include <complex>
#include <span>
#include <vector>

namespace pst {

class Spectrum;

/// Transfer amplitude between two sites written as a sum of modes,
///   a(t) = sum_m weight[m] * exp(-i * frequency[m] * t).
///
/// Built from a Spectrum by pairing each eigenvalue with v_m[to] * v_m[from];
/// (numerically) degenerate eigenvalues are merged and vanishing weights are
/// dropped. Circulant Hamiltonians collapse to a handful of modes this way.
struct TransferModes {
  std::vector<double> frequencies;
  std::vector<double> weights;

  std::complex<double> amplitude(double t) const;
};

TransferModes transfer_modes(const Spectrum& s, int from, int to);

// Grid kernels: out[i] = |a(t_i)|.
namespace serial {

// Reference implementation. Evaluates each time independently with exact
// phases; arbitrary (non-uniform) times.
void fidelity_on_grid(const TransferModes& modes, std::span<const double> times,
                      std::span<double> out);

}  // namespace serial

// Uniform grid t_i = i * dt. OpenMP over fixed-size chunks; inside a chunk the
// phases advance by a complex rotation and are re-anchored exactly at each
// chunk start. Results do not depend on the thread count.
inline constexpr int kPhaseChunk = 64;
void fidelity_on_grid(const TransferModes& modes, double dt, std::span<double> out);

}  // namespace pst

#endif  // PST_KERNELS_HPP
