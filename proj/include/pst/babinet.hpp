#ifndef PST_BABINET_HPP
#define PST_BABINET_HPP

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "pst/dynamics.hpp"
#include "pst/graph.hpp"

namespace pst::babinet {

// Complementary Hamiltonians through the full coupling H_f = N P, where
// P = |+><+| projects onto the uniform superposition.

/// P with every entry 1/n.
Eigen::MatrixXd plus_projector(int n);

/// N P, the all-ones matrix (exact, not N times the rounded 1/n).
Eigen::MatrixXd full_coupling(int n);

/// N P - h.
Hamiltonian babinet_complement(const Hamiltonian& h);

/// Cross term P h (1 - P) + (1 - P) h P.
Eigen::MatrixXd cross_coupling(const Hamiltonian& h);
/// Spectral norm of the cross term, from the eigenvalues of the symmetric
/// matrix.
double coupling_norm(const Hamiltonian& h);
double coupling_norm_frobenius(const Hamiltonian& h);

/// Aperture h_n and its complement, both decomposed once.
struct BabinetCase {
  int n = 0;
  Hamiltonian h_n;
  Hamiltonian h_c;
  Spectrum s_n;
  Spectrum s_c;
  double coupling_norm = 0.0;
  std::vector<std::pair<double, double>> discrepancy;  // (t, discrepancy)
};

BabinetCase make_case(const Hamiltonian& h_n);

/// | |<opp(k)| e^{-i H_c t} |k>| - |<opp(k)| e^{-i H_n t} |k>| |.
double discrepancy(const BabinetCase& c, double t, int k);
double discrepancy(const Hamiltonian& h_n, double t, int k);

/// Fills c.discrepancy on a uniform grid of `steps` points over [0, t_max]
/// and returns the largest value.
double scan_discrepancy(BabinetCase& c, double t_max, int steps, int k);

/// <to| e^{-i H_f t} e^{+i H_n t} |from>, with e^{-i H_f t} = 1 + (e^{-iNt} - 1) P.
Eigen::MatrixXcd factorized_complement_evolution(const Spectrum& s_n, double t);

struct ScalingRow {
  int n = 0;
  double coupling_norm = 0.0;
  double max_discrepancy = 0.0;
};

using GraphFamily = std::function<Graph(int)>;

std::vector<ScalingRow> scaling_study(const GraphFamily& family, const std::vector<int>& sizes,
                                      double t_max, int steps, int k);

/// Named families: pair, complete, cpg, ring, single-edge, edge+pair.
GraphFamily family_by_name(const std::string& name);

/// Single edge between vertices 1 and 2.
Graph single_edge(int n);
/// Pair matching plus the edge (1, 2).
Graph edge_plus_pair(int n);

}  // namespace pst::babinet

#endif  // PST_BABINET_HPP
