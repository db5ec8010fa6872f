#include "pst/babinet.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "pst/error.hpp"
#include "pst/kernels.hpp"
#include "pst/parallel.hpp"

namespace pst::babinet {

Eigen::MatrixXd plus_projector(int n) {
  if (n < 1) throw InvalidArgument("projector needs n >= 1");
  return Eigen::MatrixXd::Constant(n, n, 1.0 / n);
}

Eigen::MatrixXd full_coupling(int n) {
  if (n < 1) throw InvalidArgument("full coupling needs n >= 1");
  return Eigen::MatrixXd::Ones(n, n);
}

Hamiltonian babinet_complement(const Hamiltonian& h) {
  return Hamiltonian(full_coupling(h.size()) - h.matrix());
}

Eigen::MatrixXd cross_coupling(const Hamiltonian& h) {
  const int n = h.size();
  const Eigen::MatrixXd p = plus_projector(n);
  const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n) - p;
  const Eigen::MatrixXd x = p * h.matrix() * q;
  // x + x^T, symmetrized explicitly so the eigensolver sees an exact symmetric matrix.
  return x + x.transpose();
}

double coupling_norm(const Hamiltonian& h) {
  const Eigen::MatrixXd x = cross_coupling(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("cross-coupling eigensolver failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double coupling_norm_frobenius(const Hamiltonian& h) { return cross_coupling(h).norm(); }

BabinetCase make_case(const Hamiltonian& h_n) {
  if (h_n.size() % 2 != 0) throw InvalidArgument("Babinet case needs even n");
  Hamiltonian h_c = babinet_complement(h_n);
  Spectrum s_n = spectral_decompose(h_n);
  Spectrum s_c = spectral_decompose(h_c);
  const double norm = coupling_norm(h_n);
  return BabinetCase{h_n.size(), h_n, std::move(h_c), std::move(s_n), std::move(s_c), norm, {}};
}

double discrepancy(const BabinetCase& c, double t, int k) {
  const int target = opposite(k, c.n);
  return std::abs(std::abs(transfer_amplitude(c.s_c, t, k, target)) -
                  std::abs(transfer_amplitude(c.s_n, t, k, target)));
}

double discrepancy(const Hamiltonian& h_n, double t, int k) {
  return discrepancy(make_case(h_n), t, k);
}

double scan_discrepancy(BabinetCase& c, double t_max, int steps, int k) {
  if (!(t_max > 0.0) || steps < 2) throw InvalidArgument("invalid discrepancy window");
  const int target = opposite(k, c.n);
  const auto modes_n = transfer_modes(c.s_n, k, target);
  const auto modes_c = transfer_modes(c.s_c, k, target);
  const double dt = t_max / (steps - 1);
  std::vector<double> f_n(static_cast<std::size_t>(steps));
  std::vector<double> f_c(static_cast<std::size_t>(steps));
  fidelity_on_grid(modes_n, dt, f_n);
  fidelity_on_grid(modes_c, dt, f_c);

  c.discrepancy.clear();
  c.discrepancy.reserve(f_n.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < f_n.size(); ++i) {
    const double d = std::abs(f_c[i] - f_n[i]);
    c.discrepancy.emplace_back(static_cast<double>(i) * dt, d);
    worst = std::max(worst, d);
  }
  return worst;
}

Eigen::MatrixXcd factorized_complement_evolution(const Spectrum& s_n, double t) {
  const int n = s_n.size();
  const Eigen::MatrixXcd backward = evolution_operator(s_n, -t);
  const Eigen::RowVectorXcd column_sums = backward.colwise().sum();
  const std::complex<double> factor = (std::polar(1.0, -static_cast<double>(n) * t) - 1.0) /
                                      static_cast<double>(n);
  Eigen::MatrixXcd out = backward;
  out.rowwise() += factor * column_sums;
  return out;
}

std::vector<ScalingRow> scaling_study(const GraphFamily& family, const std::vector<int>& sizes,
                                      double t_max, int steps, int k) {
  std::vector<ScalingRow> rows(sizes.size());
  std::vector<std::exception_ptr> errors(sizes.size());
  const int count = static_cast<int>(sizes.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (int r = 0; r < count; ++r) {
    try {
      const int n = sizes[static_cast<std::size_t>(r)];
      const Graph g = family(n);
      if (g.size() != n) throw InvalidArgument("family returned a graph of the wrong size");
      BabinetCase c = make_case(hamiltonian(g));
      const double worst = scan_discrepancy(c, t_max, steps, k);
      rows[static_cast<std::size_t>(r)] = ScalingRow{n, c.coupling_norm, worst};
    } catch (...) {
      errors[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

Graph single_edge(int n) {
  if (n < 2) throw InvalidArgument("single edge needs n >= 2");
  return Graph(n, EdgeMap{{{1, 2}, 1.0}});
}

Graph edge_plus_pair(int n) {
  if (n < 4) throw InvalidArgument("edge+pair family needs n >= 4");
  EdgeMap w = pair_matching(n).edges();
  w[{1, 2}] = 1.0;
  return Graph(n, std::move(w));
}

GraphFamily family_by_name(const std::string& name) {
  if (name == "pair") return pair_matching;
  if (name == "complete") return complete;
  if (name == "cpg") return cross_polytope;
  if (name == "ring") return ring;
  if (name == "single-edge") return single_edge;
  if (name == "edge+pair") return edge_plus_pair;
  throw InvalidArgument("unknown graph family `" + name + "`");
}

}  // namespace pst::babinet
