#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "locyc/graph.hpp"

namespace locyc {

inline constexpr Vertex kNoParent = -1;

/// Rooted spanning forest with the bookkeeping the cycle proofs need.
///
/// Children are kept in order-rank order, discovery indices are preorder
/// positions (roots in order-rank order), so every subtree occupies the
/// contiguous preorder range [discovery(v), discovery(v) + subtree_size(v)).
class DfsForest {
 public:
  DfsForest() = default;

  /// Builds a forest from an explicit parent array (kNoParent for roots).
  /// Throws InputError when `order` is not a permutation or the parent
  /// relation has a cycle. Used for hand-built and random test forests.
  static DfsForest from_parents(std::vector<Vertex> order, std::vector<Vertex> parent);

  std::size_t size() const noexcept { return parent_.size(); }
  std::span<const Vertex> order() const noexcept { return order_; }
  std::size_t rank(Vertex v) const { return rank_[idx(v)]; }
  Vertex parent(Vertex v) const { return parent_[idx(v)]; }
  bool is_root(Vertex v) const { return parent_[idx(v)] == kNoParent; }
  std::span<const Vertex> roots() const noexcept { return roots_; }
  Vertex root_of(Vertex v) const { return root_of_[idx(v)]; }
  std::size_t discovery(Vertex v) const { return discovery_[idx(v)]; }
  std::size_t subtree_size(Vertex v) const { return subtree_size_[idx(v)]; }
  std::size_t depth(Vertex v) const { return depth_[idx(v)]; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offsets_[idx(v)], child_list_.data() + child_offsets_[idx(v) + 1]};
  }
  /// Vertices in discovery order.
  std::span<const Vertex> preorder() const noexcept { return preorder_; }
  /// True when a lies on the forest path from d to its root (a == d included).
  bool is_ancestor(Vertex a, Vertex d) const {
    return discovery(a) <= discovery(d) && discovery(d) < discovery(a) + subtree_size(a);
  }
  /// Vertices of the subtree rooted at v, in discovery order.
  std::span<const Vertex> subtree(Vertex v) const { return {preorder_.data() + discovery(v), subtree_size(v)}; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  void finalize();

  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> roots_;
  std::vector<Vertex> root_of_;
  std::vector<std::size_t> discovery_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> child_offsets_;
  std::vector<Vertex> child_list_;
  std::vector<Vertex> preorder_;
};

/// 0, 1, ..., n-1.
std::vector<Vertex> identity_order(std::size_t n);
/// Uniformly random permutation of 0..n-1 under the seeded generator.
std::vector<Vertex> random_order(std::size_t n, std::uint64_t seed);

/// Stack-based DFS prioritizing vertices by `order`: the top of the stack
/// advances to its order-first unvisited neighbor, and when the stack empties
/// the order-first unvisited vertex becomes a new root. Iterative; safe for
/// any n. Throws InputError when order is not a permutation of 0..n-1.
DfsForest dfs_forest(const Graph& g, std::span<const Vertex> order);

/// True iff every non-forest edge of g joins a vertex to one of its forest
/// ancestors. Throws InputError when the forest does not belong to g.
bool check_back_edge_property(const Graph& g, const DfsForest& forest);

/// A vertex v plus children X of v whose subtree sizes total between
/// floor(k/2) and k.
struct SplitWitness {
  Vertex v = kNoParent;
  std::vector<Vertex> children;
  std::size_t total = 0;
  std::size_t k = 0;
};

/// Descends from tree_root to the order-first vertex v with s(v) > k and
/// every child at most k. Returns the order-first child with s >= k/2 as a
/// singleton if there is one, else a maximal order-greedy set of children
/// with total <= k. Throws InputError if tree_root is not a root or k == 0,
/// PreconditionError if the tree has at most k vertices.
SplitWitness split_under_vertex(const DfsForest& forest, Vertex tree_root, std::size_t k);

/// v, parent(v), ..., root.
std::vector<Vertex> tree_path_to_root(const DfsForest& forest, Vertex v);

}  // namespace locyc
