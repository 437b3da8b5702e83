#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "locyc/errors.hpp"
#include "locyc/graph.hpp"
#include "locyc/graph_io.hpp"
#include "locyc/rational.hpp"
#include "locyc/rng.hpp"
#include "support.hpp"

namespace locyc {
namespace {

using testing::coin_graph;

Graph k63() { return graphs::complete_bipartite(6, 3); }

// Longest cycle by extending simple paths from their smallest vertex.
std::size_t naive_circumference(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  auto extend = [&](auto&& self, Vertex start) -> void {
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w == start && path.size() >= 3) best = std::max(best, path.size());
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      self(self, start);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = 1;
    path = {static_cast<Vertex>(s)};
    extend(extend, static_cast<Vertex>(s));
    used[s] = 0;
  }
  return best;
}

TEST(Graph, ExternalNeighborhoodExamples) {
  EXPECT_EQ(external_neighborhood(graphs::path(4), VertexSet{1, 2}), (VertexSet{0, 3}));
  const Graph k4 = graphs::complete(4);
  EXPECT_TRUE(external_neighborhood(k4, VertexSet{0, 1, 2, 3}).empty());
  EXPECT_EQ(external_neighborhood(k63(), VertexSet{0, 1, 2, 3, 4, 5}), (VertexSet{6, 7, 8}));
}

TEST(Graph, InducedEdgeCountExamples) {
  EXPECT_EQ(induced_edge_count(graphs::cycle(3), VertexSet{0, 1, 2}), 3u);
  EXPECT_EQ(induced_edge_count(graphs::complete(4), VertexSet{0, 2, 3}), 3u);
  EXPECT_EQ(induced_edge_count(k63(), VertexSet{6, 7, 8}), 0u);
}

TEST(Graph, IncidentEdgeCountExamples) {
  const Graph k4 = graphs::complete(4);
  EXPECT_EQ(incident_edge_count(k4, VertexSet{2}), 3u);
  EXPECT_EQ(incident_edge_count(k4, VertexSet{0, 3}), 5u);
  EXPECT_EQ(incident_edge_count(k63(), VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8}), 18u);
}

TEST(Graph, ComponentsExamples) {
  const auto two = connected_components(graphs::disjoint_union(graphs::cycle(3), graphs::cycle(3)));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 3u);
  EXPECT_EQ(two[1].size(), 3u);
  EXPECT_EQ(connected_components(graphs::empty(4)).size(), 4u);
  const auto one = connected_components(graphs::complete(5));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 5u);
}

TEST(Graph, CircumferenceExamples) {
  EXPECT_EQ(longest_cycle_bruteforce(graphs::complete(4)), 4u);
  const Graph tree = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  EXPECT_EQ(longest_cycle_bruteforce(tree), 0u);
  EXPECT_EQ(longest_cycle_bruteforce(k63()), 6u);
  EXPECT_EQ(longest_path_bruteforce(graphs::path(5)), 5u);
  EXPECT_EQ(longest_cycle_bruteforce(graphs::cycle(6)), 6u);
  EXPECT_EQ(longest_cycle_bruteforce(graphs::complete_bipartite(3, 3)), 6u);
}

TEST(Graph, CircumferenceCapIsEnforced) {
  EXPECT_THROW(longest_cycle_bruteforce(graphs::empty(kBruteForceCycleCap + 1)), SizeCapError);
}

TEST(GraphProperty, CircumferenceMatchesPathEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const Graph g = coin_graph(n, 0.15 + 0.7 * rng.uniform01(), rng);
    ASSERT_EQ(longest_cycle_bruteforce(g), naive_circumference(g)) << "trial " << trial;
  }
}

TEST(GraphProperty, NeighborhoodIsDisjointFromSet) {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(14);
    const Graph g = coin_graph(n, rng.uniform01(), rng);
    const VertexSet w = testing::random_subset(n, rng);
    for (Vertex v : external_neighborhood(g, w)) ASSERT_FALSE(w.contains(v));
  }
}

TEST(GraphProperty, IncidentSplitsIntoInducedPlusCrossing) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Graph g = coin_graph(n, rng.uniform01(), rng);
    const VertexSet w = testing::random_subset(n, rng);
    std::size_t crossing = 0;
    const VertexSet nw = external_neighborhood(g, w);
    for (const Edge& e : g.edges()) {
      if ((w.contains(e.u) && nw.contains(e.v)) || (w.contains(e.v) && nw.contains(e.u))) ++crossing;
    }
    ASSERT_EQ(incident_edge_count(g, w), induced_edge_count(g, w) + crossing);
  }
}

TEST(GraphProperty, ComponentsPartitionTheGraph) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.below(30);
    const Graph g = coin_graph(n, 0.15 * rng.uniform01(), rng);
    const auto comps = connected_components(g);
    std::vector<int> label(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      ASSERT_FALSE(comps[c].empty());
      for (Vertex v : comps[c]) {
        ASSERT_EQ(label[static_cast<std::size_t>(v)], -1) << "vertex in two parts";
        label[static_cast<std::size_t>(v)] = static_cast<int>(c);
      }
      ASSERT_EQ(connected_components(induced_subgraph(g, comps[c]).graph).size(), 1u);
    }
    for (int l : label) ASSERT_NE(l, -1);
    for (const Edge& e : g.edges()) ASSERT_EQ(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  }
}

TEST(GraphProperty, InducedSubgraphMapsBack) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(16);
    const Graph g = coin_graph(n, rng.uniform01(), rng);
    const VertexSet r = testing::random_subset(n, rng);
    const Subgraph sub = induced_subgraph(g, r);
    ASSERT_EQ(sub.graph.num_vertices(), r.size());
    ASSERT_EQ(sub.graph.num_edges(), induced_edge_count(g, r));
    for (const Edge& e : sub.graph.edges()) {
      ASSERT_TRUE(g.has_edge(sub.to_parent[static_cast<std::size_t>(e.u)], sub.to_parent[static_cast<std::size_t>(e.v)]));
    }
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
}

TEST(GraphIo, RoundTrip) {
  Rng rng(5);
  const Graph g = coin_graph(12, 0.4, rng);
  std::stringstream text;
  write_edge_list(text, g);
  const Graph back = parse_edge_list(text);
  EXPECT_EQ(back.num_vertices(), g.num_vertices());
  EXPECT_TRUE(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_edge_list(in);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("3 2\n0 1\n1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 1\n2 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n").find("no error"), 0u);
}

TEST(GraphIo, LabeledInputGetsDenseIds) {
  std::istringstream in("# comment\nalice bob\nbob carol\ncarol alice\n");
  const LabeledGraph lg = parse_labeled_edge_list(in);
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 3u);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"alice", "bob", "carol"}));
  std::ostringstream map;
  write_label_map(map, lg.labels);
  EXPECT_EQ(map.str(), "0 alice\n1 bob\n2 carol\n");
}

TEST(Rational, ParseAndCompare) {
  EXPECT_EQ(Rational::parse("6/5"), Rational(6, 5));
  EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("2"), Rational(2));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_LT(Rational(6, 5), Rational(5, 4));
  EXPECT_EQ(Rational::from_double(1.2), Rational(6, 5));
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("abc"), InputError);
  EXPECT_EQ(compare_scaled(6, Rational(3, 2), 4), 0);
  EXPECT_EQ(compare_scaled(5, Rational(3, 2), 4), -1);
  EXPECT_EQ(compare_scaled(7, Rational(3, 2), 4), 1);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    ASSERT_EQ(x, b.below(7));
    ASSERT_LT(x, 7u);
  }
  EXPECT_NE(derive_seed(1, "maker"), derive_seed(1, "breaker"));
  EXPECT_NE(derive_seed(1, std::uint64_t{0}), derive_seed(2, std::uint64_t{0}));
}

TEST(Rng, BelowIsRoughlyUniform) {
  Rng rng(7);
  std::vector<int> counts(6, 0);
  const int trials = 60000;
  for (int i = 0; i < trials; ++i) ++counts[rng.below(6)];
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - trials / 6.0) * (c - trials / 6.0) / (trials / 6.0);
  EXPECT_LT(chi2, 20.5);  // chi-square, 5 dof, p ~ 0.001
}

}  // namespace
}  // namespace locyc
