#include <gtest/gtest.h>

#include <numeric>

#include "locyc/dfs.hpp"
#include "locyc/errors.hpp"
#include "support.hpp"

namespace locyc {
namespace {

std::vector<Vertex> parents_of(const DfsForest& f) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(f.parent(static_cast<Vertex>(v)));
  return out;
}

DfsForest forest_of(const Graph& g) { return dfs_forest(g, identity_order(g.num_vertices())); }

// Rooted tree from a parent array, vertices in identity order.
DfsForest tree(std::vector<Vertex> parent) {
  const std::size_t n = parent.size();
  return DfsForest::from_parents(identity_order(n), std::move(parent));
}

TEST(Dfs, PathIsItsOwnTree) {
  const auto f = forest_of(graphs::path(4));
  EXPECT_EQ(parents_of(f), (std::vector<Vertex>{kNoParent, 0, 1, 2}));
  ASSERT_EQ(f.roots().size(), 1u);
  EXPECT_EQ(f.roots()[0], 0);
}

TEST(Dfs, CompleteGraphGivesHamiltonPath) {
  const auto f = forest_of(graphs::complete(4));
  EXPECT_EQ(parents_of(f), (std::vector<Vertex>{kNoParent, 0, 1, 2}));
}

TEST(Dfs, DisjointEdgesGiveTwoTrees) {
  const auto f = forest_of(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(f.roots().size(), 2u);
  EXPECT_EQ(f.roots()[0], 0);
  EXPECT_EQ(f.roots()[1], 2);
}

TEST(Dfs, OrderSteersTheSearch) {
  const auto f = dfs_forest(graphs::path(4), std::vector<Vertex>{3, 2, 1, 0});
  EXPECT_EQ(parents_of(f), (std::vector<Vertex>{1, 2, 3, kNoParent}));
  EXPECT_THROW(dfs_forest(graphs::path(3), std::vector<Vertex>{0, 0, 1}), InputError);
}

TEST(Dfs, BackEdgePropertyExamples) {
  const Graph k4 = graphs::complete(4);
  EXPECT_TRUE(check_back_edge_property(k4, forest_of(k4)));
  // Tree 0 -> {1, 2}; the edge 1-2 joins two leaves in different branches.
  const Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_FALSE(check_back_edge_property(g, tree({kNoParent, 0, 0})));
}

TEST(DfsProperty, BackEdgesAndDeterminism) {
  Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(50);
    const Graph g = testing::coin_graph(n, 0.3 * rng.uniform01(), rng);
    const auto order = random_order(n, rng.next_u64());
    const auto f = dfs_forest(g, order);
    ASSERT_TRUE(check_back_edge_property(g, f));
    ASSERT_EQ(parents_of(dfs_forest(g, order)), parents_of(f));
    for (std::size_t v = 0; v < n; ++v) {
      const Vertex p = f.parent(static_cast<Vertex>(v));
      if (p != kNoParent) {
        ASSERT_TRUE(g.has_edge(p, static_cast<Vertex>(v)));
      }
    }
  }
}

TEST(DfsProperty, StoredSubtreeSizesMatchRecount) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(60);
    const Graph g = testing::coin_graph(n, 0.2 * rng.uniform01(), rng);
    const auto f = dfs_forest(g, random_order(n, rng.next_u64()));
    std::vector<std::size_t> size(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      // Walk to the root, crediting every ancestor including v itself.
      for (Vertex a = static_cast<Vertex>(v); a != kNoParent; a = f.parent(a)) ++size[static_cast<std::size_t>(a)];
    }
    for (std::size_t v = 0; v < n; ++v) ASSERT_EQ(f.subtree_size(static_cast<Vertex>(v)), size[v]);
  }
}

TEST(Split, PathTree) {
  const auto f = tree({kNoParent, 0, 1, 2, 3, 4, 5});
  const auto s = split_under_vertex(f, 0, 6);
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.children, (std::vector<Vertex>{1}));
  EXPECT_EQ(s.total, 6u);
}

TEST(Split, StarTakesGreedyPrefix) {
  std::vector<Vertex> parent(10, 0);
  parent[0] = kNoParent;
  const auto s = split_under_vertex(tree(parent), 0, 6);
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.children, (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(s.total, 6u);
}

TEST(Split, BinaryTreeDescendsOneLevel) {
  std::vector<Vertex> parent(15, kNoParent);
  for (std::size_t v = 1; v < 15; ++v) parent[v] = static_cast<Vertex>((v - 1) / 2);
  const auto s = split_under_vertex(tree(parent), 0, 6);
  EXPECT_EQ(s.v, 1);  // s(1) = 7 > 6, its children have 3 each
  EXPECT_EQ(s.children, (std::vector<Vertex>{3}));
  EXPECT_EQ(s.total, 3u);
}

TEST(Split, RejectsSmallTrees) {
  const auto f = tree({kNoParent, 0, 1});
  EXPECT_THROW(split_under_vertex(f, 0, 3), PreconditionError);
  EXPECT_THROW(split_under_vertex(f, 1, 1), InputError);
}

TEST(SplitProperty, TotalsStayInRange) {
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.below(150);
    std::vector<Vertex> parent(n, kNoParent);
    for (std::size_t v = 1; v < n; ++v) parent[v] = static_cast<Vertex>(rng.below(v));
    const auto f = tree(parent);
    const std::size_t k = 1 + rng.below(n - 1);
    const auto s = split_under_vertex(f, 0, k);
    ASSERT_GE(s.total, k / 2);
    ASSERT_LE(s.total, k);
    ASSERT_GT(f.subtree_size(s.v), k);
    std::size_t total = 0;
    for (Vertex x : s.children) {
      ASSERT_EQ(f.parent(x), s.v);
      total += f.subtree_size(x);
    }
    ASSERT_EQ(total, s.total);
    for (Vertex c : f.children(s.v)) ASSERT_LE(f.subtree_size(c), k);
  }
}

TEST(TreePath, Examples) {
  const auto f = tree({kNoParent, 0, 1, 2});
  EXPECT_EQ(tree_path_to_root(f, 0), (std::vector<Vertex>{0}));
  EXPECT_EQ(tree_path_to_root(f, 3), (std::vector<Vertex>{3, 2, 1, 0}));
  std::vector<Vertex> parent(15, kNoParent);
  for (std::size_t v = 1; v < 15; ++v) parent[v] = static_cast<Vertex>((v - 1) / 2);
  const auto b = tree(parent);
  for (Vertex leaf = 7; leaf < 15; ++leaf) EXPECT_EQ(tree_path_to_root(b, leaf).size(), b.depth(leaf) + 1);
}

}  // namespace
}  // namespace locyc
