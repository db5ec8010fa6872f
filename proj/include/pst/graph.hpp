#ifndef PST_GRAPH_HPP
#define PST_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pst {

/// Undirected edge key, always stored as (min, max) with 1-based labels.
using EdgeKey = std::pair<int, int>;
using EdgeMap = std::map<EdgeKey, double>;

/// Network topology on n vertices labeled 1..n around a circle.
///
/// Weights are symmetric by construction (one entry per unordered pair) and
/// self-loops are rejected. A Graph is immutable once built.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, EdgeMap weights);

  int size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }
  const EdgeMap& edges() const noexcept { return weights_; }

  /// Coupling between i and j; 0 when absent. Order of i, j is irrelevant.
  double weight(int i, int j) const;
  bool has_edge(int i, int j) const;

  /// True when every stored edge has weight exactly 1.
  bool is_unit_weight() const noexcept;
  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  EdgeMap weights_;
};

EdgeKey edge_key(int i, int j);

/// Antipodal vertex across the ring, ((j - 1 + n/2) mod n) + 1. Requires even n.
int opposite(int j, int n);

Graph ring(int n);
Graph circulant(int n, const std::set<int>& jumps);
Graph connectivity_graph(int n, int c);
Graph cross_polytope(int n);
Graph pair_matching(int n);
Graph complete(int n);
Graph complement(const Graph& g);

// Half the degree, with the diameter chord rounding up. Defined for regular
// graphs only.
int connectivity(const Graph& g);

Graph perturb_couplings(const Graph& g, double delta, std::uint64_t seed);
Graph break_bonds(const Graph& g, double ratio, std::uint64_t seed);
std::size_t broken_bond_count(std::size_t edges, double ratio);

// Edge-list text: `n=<N>` header then `i j w` per line.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
Graph load_graph(const std::string& path);

}  // namespace pst

#endif  // PST_GRAPH_HPP
