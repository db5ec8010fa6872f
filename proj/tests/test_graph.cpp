#include <gtest/gtest.h>

#include <sstream>

#include "pst/error.hpp"
#include "pst/graph.hpp"

namespace pst {
namespace {

void expect_well_formed(const Graph& g) {
  for (const auto& [key, w] : g.edges()) {
    EXPECT_LT(key.first, key.second);
    EXPECT_EQ(g.weight(key.first, key.second), g.weight(key.second, key.first));
  }
  for (int i = 1; i <= g.size(); ++i) EXPECT_FALSE(g.has_edge(i, i));
}

TEST(Ring, FourCycle) {
  const Graph g = ring(4);
  EXPECT_EQ(g.edges(), (EdgeMap{{{1, 2}, 1.0}, {{2, 3}, 1.0}, {{3, 4}, 1.0}, {{1, 4}, 1.0}}));
}

TEST(Ring, HexagonAndTriangle) {
  EXPECT_EQ(ring(6).edge_count(), 6u);
  EXPECT_EQ(ring(3).edge_count(), 3u);
  for (int d : ring(6).degrees()) EXPECT_EQ(d, 2);
  EXPECT_THROW(ring(2), InvalidArgument);
}

TEST(Circulant, Examples) {
  EXPECT_EQ(circulant(4, {1}), ring(4));
  EXPECT_EQ(circulant(8, {1, 2, 3}), cross_polytope(8));
  const Graph k6 = circulant(6, {1, 2, 3});
  EXPECT_EQ(k6.edge_count(), 15u);
  EXPECT_EQ(k6, complete(6));
}

TEST(Circulant, DiameterJumpCountedOnce) {
  EXPECT_EQ(circulant(8, {4}), pair_matching(8));
}

TEST(Circulant, RejectsOutOfRangeJump) {
  EXPECT_THROW(circulant(6, {4}), InvalidArgument);
  EXPECT_THROW(circulant(6, {0}), InvalidArgument);
}

TEST(ConnectivityGraph, Examples) {
  const Graph g = connectivity_graph(6, 2);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_EQ(g, cross_polytope(6));
  EXPECT_EQ(connectivity_graph(6, 3), complete(6));
  EXPECT_EQ(connectivity_graph(200, 1), ring(200));
  EXPECT_THROW(connectivity_graph(6, 0), InvalidArgument);
  EXPECT_THROW(connectivity_graph(6, 4), InvalidArgument);
  EXPECT_THROW(connectivity_graph(7, 2), InvalidArgument);
}

TEST(ConnectivityGraph, Regularity) {
  for (int n = 4; n <= 24; n += 2) {
    for (int c = 1; c <= n / 2; ++c) {
      const Graph g = connectivity_graph(n, c);
      const int expected = c < n / 2 ? 2 * c : n - 1;
      for (int d : g.degrees()) EXPECT_EQ(d, expected) << "n=" << n << " c=" << c;
      EXPECT_EQ(connectivity(g), c);
      expect_well_formed(g);
    }
  }
}

TEST(CrossPolytope, Examples) {
  EXPECT_EQ(cross_polytope(4), ring(4));
  const Graph g6 = cross_polytope(6);
  EXPECT_EQ(g6.edge_count(), 12u);
  EXPECT_FALSE(g6.has_edge(1, 4));
  EXPECT_TRUE(g6.has_edge(1, 3));
  EXPECT_THROW(cross_polytope(5), InvalidArgument);
  EXPECT_THROW(cross_polytope(2), InvalidArgument);
}

TEST(CrossPolytope, CirculantIdentityAndComplementarity) {
  for (int n = 4; n <= 64; n += 2) {
    const Graph cpg = cross_polytope(n);
    EXPECT_EQ(cpg, connectivity_graph(n, n / 2 - 1)) << n;
    EXPECT_EQ(cpg.edge_count(), static_cast<std::size_t>(n * (n - 2) / 2));
    for (int d : cpg.degrees()) EXPECT_EQ(d, n - 2);

    const Graph pairs = pair_matching(n);
    const Graph full = complete(n);
    for (const auto& [key, w] : pairs.edges()) EXPECT_FALSE(cpg.has_edge(key.first, key.second));
    EXPECT_EQ(cpg.edge_count() + pairs.edge_count(), full.edge_count());
    EXPECT_EQ(complement(cpg), pairs);
    expect_well_formed(cpg);
  }
}

TEST(PairMatching, Examples) {
  EXPECT_EQ(pair_matching(4).edges(), (EdgeMap{{{1, 3}, 1.0}, {{2, 4}, 1.0}}));
  EXPECT_EQ(pair_matching(6).edges(), (EdgeMap{{{1, 4}, 1.0}, {{2, 5}, 1.0}, {{3, 6}, 1.0}}));
  EXPECT_THROW(pair_matching(5), InvalidArgument);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(cross_polytope(8)), pair_matching(8));
  EXPECT_EQ(complement(complete(5)).edge_count(), 0u);
  EXPECT_EQ(complement(ring(4)), pair_matching(4));
  for (int n : {3, 5, 8, 11}) {
    EXPECT_EQ(complement(complement(ring(n))), ring(n));
  }
  EXPECT_THROW(complement(perturb_couplings(ring(6), 0.1, 1)), InvalidArgument);
}

TEST(Opposite, Labels) {
  EXPECT_EQ(opposite(1, 8), 5);
  EXPECT_EQ(opposite(5, 8), 1);
  EXPECT_EQ(opposite(8, 8), 4);
  EXPECT_THROW(opposite(1, 7), InvalidArgument);
  EXPECT_THROW(opposite(9, 8), InvalidArgument);
}

TEST(Graph, RejectsSelfLoopsAndBadVertices) {
  EXPECT_THROW(Graph(3, EdgeMap{{{2, 2}, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, EdgeMap{{{1, 4}, 1.0}}), InvalidArgument);
  EXPECT_THROW(Graph(0), InvalidArgument);
  const Graph g(3, EdgeMap{{{3, 1}, 0.5}});
  EXPECT_EQ(g.weight(1, 3), 0.5);
  EXPECT_EQ(g.weight(3, 1), 0.5);
  EXPECT_EQ(g.weight(1, 2), 0.0);
}

TEST(PerturbCouplings, ZeroDisorderIsIdentity) {
  const Graph g = cross_polytope(12);
  EXPECT_EQ(perturb_couplings(g, 0.0, 7), g);
}

TEST(PerturbCouplings, WeightsInsideInterval) {
  const Graph g = cross_polytope(40);
  const Graph p = perturb_couplings(g, 0.02, 42);
  ASSERT_EQ(p.edge_count(), g.edge_count());
  bool any_changed = false;
  for (const auto& [key, w] : p.edges()) {
    EXPECT_TRUE(g.has_edge(key.first, key.second));
    EXPECT_GE(w, 0.98);
    EXPECT_LE(w, 1.02);
    any_changed |= w != 1.0;
  }
  EXPECT_TRUE(any_changed);
  expect_well_formed(p);
}

TEST(PerturbCouplings, DeterministicGivenSeed) {
  const Graph g = cross_polytope(20);
  EXPECT_EQ(perturb_couplings(g, 0.3, 99), perturb_couplings(g, 0.3, 99));
  EXPECT_NE(perturb_couplings(g, 0.3, 99), perturb_couplings(g, 0.3, 100));
}

TEST(PerturbCouplings, RejectsBadDelta) {
  EXPECT_THROW(perturb_couplings(ring(4), -0.1, 1), InvalidArgument);
  EXPECT_THROW(perturb_couplings(ring(4), 1.5, 1), InvalidArgument);
}

TEST(BreakBonds, Counts) {
  const Graph g = cross_polytope(200);
  ASSERT_EQ(g.edge_count(), 19800u);
  EXPECT_EQ(broken_bond_count(19800, 0.0005), 10u);
  const Graph b = break_bonds(g, 0.0005, 3);
  EXPECT_EQ(g.edge_count() - b.edge_count(), 10u);
  for (const auto& [key, w] : b.edges()) EXPECT_TRUE(g.has_edge(key.first, key.second));
  EXPECT_EQ(break_bonds(g, 0.0, 3), g);
}

TEST(BreakBonds, RemovedCountMatchesContract) {
  const Graph g = cross_polytope(30);
  for (double b : {0.01, 0.1, 0.25, 0.5, 0.9}) {
    const Graph r = break_bonds(g, b, 11);
    EXPECT_EQ(g.edge_count() - r.edge_count(), broken_bond_count(g.edge_count(), b)) << b;
  }
  EXPECT_EQ(broken_bond_count(10, 0.25), 3u);  // 2.5 rounds up
}

TEST(BreakBonds, DeterministicAndSeedSensitive) {
  const Graph g = cross_polytope(40);
  EXPECT_EQ(break_bonds(g, 0.05, 5), break_bonds(g, 0.05, 5));
  EXPECT_NE(break_bonds(g, 0.05, 5), break_bonds(g, 0.05, 6));
}

TEST(BreakBonds, Errors) {
  EXPECT_THROW(break_bonds(ring(6), 1.0, 1), InvalidArgument);
  EXPECT_THROW(break_bonds(ring(6), -0.1, 1), InvalidArgument);
  EXPECT_THROW(break_bonds(Graph(4), 0.1, 1), InvalidArgument);
}

TEST(GraphIO, RoundTripPreservesWeightsExactly) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = break_bonds(perturb_couplings(cross_polytope(16), 0.4, seed), 0.2, seed);
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);
  }
}

TEST(GraphIO, Format) {
  std::stringstream ss;
  write_graph(ss, ring(3));
  EXPECT_EQ(ss.str(), "n=3\n1 2 1\n1 3 1\n2 3 1\n");
}

TEST(GraphIO, MalformedInput) {
  std::istringstream no_header("1 2 1\n");
  EXPECT_THROW(read_graph(no_header), InvalidArgument);
  std::istringstream bad_edge("n=3\n1 2\n");
  EXPECT_THROW(read_graph(bad_edge), InvalidArgument);
  std::istringstream loop("n=3\n2 2 1\n");
  EXPECT_THROW(read_graph(loop), InvalidArgument);
  std::istringstream conflict("n=3\n1 2 1\n2 1 0.5\n");
  EXPECT_THROW(read_graph(conflict), InvalidArgument);
  EXPECT_THROW(load_graph("/nonexistent/graph.txt"), InvalidArgument);
}

}  // namespace
}  // namespace pst
