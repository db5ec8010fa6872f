#include "pst/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pst/error.hpp"
#include "pst/rng.hpp"

namespace pst {

namespace {

void require_vertex(int v, int n) {
  if (v < 1 || v > n) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

EdgeKey edge_key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("graph needs at least one vertex");
}

Graph::Graph(int n, EdgeMap weights) : Graph(n) {
  for (const auto& [key, w] : weights) {
    const auto [i, j] = key;
    require_vertex(i, n);
    require_vertex(j, n);
    if (i == j) throw InvalidArgument("self-loop at vertex " + std::to_string(i));
    if (!std::isfinite(w)) throw InvalidArgument("non-finite edge weight");
    weights_[edge_key(i, j)] = w;
  }
}

double Graph::weight(int i, int j) const {
  require_vertex(i, n_);
  require_vertex(j, n_);
  if (i == j) return 0.0;
  const auto it = weights_.find(edge_key(i, j));
  return it == weights_.end() ? 0.0 : it->second;
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  return weights_.contains(edge_key(i, j));
}

bool Graph::is_unit_weight() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const auto& e) { return e.second == 1.0; });
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& [key, w] : weights_) {
    ++deg[static_cast<std::size_t>(key.first - 1)];
    ++deg[static_cast<std::size_t>(key.second - 1)];
  }
  return deg;
}

int opposite(int j, int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("no opposite vertex: n = " + std::to_string(n) + " is not even");
  }
  require_vertex(j, n);
  return ((j - 1 + n / 2) % n) + 1;
}

Graph ring(int n) {
  if (n < 3) throw InvalidArgument("ring needs n >= 3");
  return circulant(n, {1});
}

Graph circulant(int n, const std::set<int>& jumps) {
  if (n < 1) throw InvalidArgument("circulant needs n >= 1");
  EdgeMap w;
  for (int d : jumps) {
    if (d < 1 || d > n / 2) {
      throw InvalidArgument("jump " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
    }
    for (int i = 1; i <= n; ++i) {
      const int j = (i - 1 + d) % n + 1;
      w[edge_key(i, j)] = 1.0;
    }
  }
  return Graph(n, std::move(w));
}

Graph connectivity_graph(int n, int c) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("connectivity graph needs even n");
  if (c < 1 || c > n / 2) {
    throw InvalidArgument("connectivity " + std::to_string(c) + " outside 1.." + std::to_string(n / 2));
  }
  std::set<int> jumps;
  for (int d = 1; d <= c; ++d) jumps.insert(d);
  return circulant(n, jumps);
}

Graph cross_polytope(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("cross polytope needs even n >= 4");
  EdgeMap w;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j - i != n / 2) w[{i, j}] = 1.0;
    }
  }
  return Graph(n, std::move(w));
}

Graph pair_matching(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("pair matching needs even n");
  EdgeMap w;
  for (int i = 1; i <= n / 2; ++i) w[{i, i + n / 2}] = 1.0;
  return Graph(n, std::move(w));
}

Graph complete(int n) {
  EdgeMap w;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) w[{i, j}] = 1.0;
  }
  return Graph(n, std::move(w));
}

Graph complement(const Graph& g) {
  if (!g.is_unit_weight()) throw InvalidArgument("complement requires a unit-weight graph");
  const int n = g.size();
  EdgeMap w;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!g.has_edge(i, j)) w[{i, j}] = 1.0;
    }
  }
  return Graph(n, std::move(w));
}

int connectivity(const Graph& g) {
  const auto deg = g.degrees();
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>{}) != deg.end()) {
    throw InvalidArgument("connectivity is defined for regular graphs only");
  }
  return (deg.front() + 1) / 2;
}

Graph perturb_couplings(const Graph& g, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("disorder delta must lie in [0, 1]");
  if (!g.is_unit_weight()) throw InvalidArgument("perturb_couplings requires a unit-weight graph");
  Engine eng(seed);
  EdgeMap w = g.edges();
  for (auto& [key, value] : w) {
    value = 1.0 - delta + 2.0 * delta * uniform01(eng);
  }
  return Graph(g.size(), std::move(w));
}

std::size_t broken_bond_count(std::size_t edges, double ratio) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(edges) + 0.5));
}

Graph break_bonds(const Graph& g, double ratio, std::uint64_t seed) {
  if (!(ratio >= 0.0 && ratio < 1.0)) throw InvalidArgument("broken ratio must lie in [0, 1)");
  if (g.edge_count() == 0) throw InvalidArgument("break_bonds requires at least one edge");
  const std::size_t total = g.edge_count();
  const std::size_t remove = broken_bond_count(total, ratio);
  if (remove == 0) return g;

  std::vector<EdgeKey> keys;
  keys.reserve(total);
  for (const auto& e : g.edges()) keys.push_back(e.first);

  // Partial Fisher-Yates: the first `remove` slots hold a uniform sample.
  Engine eng(seed);
  for (std::size_t i = 0; i < remove; ++i) {
    const std::size_t j = i + uniform_below(eng, total - i);
    std::swap(keys[i], keys[j]);
  }
  EdgeMap w = g.edges();
  for (std::size_t i = 0; i < remove; ++i) w.erase(keys[i]);
  return Graph(g.size(), std::move(w));
}

}  // namespace pst
