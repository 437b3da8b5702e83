#include "locyc/dfs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "locyc/errors.hpp"
#include "locyc/rng.hpp"

namespace locyc {

namespace {

std::vector<std::size_t> ranks_of(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) throw InputError("vertex order has " + std::to_string(order.size()) + " entries, expected " + std::to_string(n));
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || rank[static_cast<std::size_t>(v)] != kUnset) {
      throw InputError("vertex order is not a permutation of 0.." + std::to_string(n) + "-1");
    }
    rank[static_cast<std::size_t>(v)] = i;
  }
  return rank;
}

}  // namespace

std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<Vertex> random_order(std::size_t n, std::uint64_t seed) {
  auto order = identity_order(n);
  Rng rng(seed);
  rng.shuffle(order.begin(), order.end());
  return order;
}

DfsForest DfsForest::from_parents(std::vector<Vertex> order, std::vector<Vertex> parent) {
  const std::size_t n = parent.size();
  DfsForest f;
  f.rank_ = ranks_of(order, n);
  for (Vertex p : parent) {
    if (p != kNoParent && (p < 0 || static_cast<std::size_t>(p) >= n)) throw InputError("parent id out of range");
  }
  f.order_ = std::move(order);
  f.parent_ = std::move(parent);
  f.finalize();
  return f;
}

void DfsForest::finalize() {
  const std::size_t n = parent_.size();
  child_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (parent_[v] != kNoParent) ++child_offsets_[idx(parent_[v]) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) child_offsets_[v + 1] += child_offsets_[v];
  child_list_.assign(child_offsets_[n], 0);
  std::vector<std::size_t> fill(child_offsets_.begin(), child_offsets_.end() - 1);
  roots_.clear();
  for (Vertex v : order_) {
    if (parent_[idx(v)] == kNoParent) {
      roots_.push_back(v);
    } else {
      child_list_[fill[idx(parent_[idx(v)])]++] = v;
    }
  }

  preorder_.clear();
  preorder_.reserve(n);
  discovery_.assign(n, 0);
  depth_.assign(n, 0);
  root_of_.assign(n, kNoParent);
  subtree_size_.assign(n, 1);
  std::vector<Vertex> stack;
  for (Vertex r : roots_) {
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      discovery_[idx(v)] = preorder_.size();
      preorder_.push_back(v);
      root_of_[idx(v)] = r;
      auto kids = children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        depth_[idx(*it)] = depth_[idx(v)] + 1;
        stack.push_back(*it);
      }
    }
  }
  if (preorder_.size() != n) throw InputError("parent relation contains a cycle");
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    if (parent_[idx(*it)] != kNoParent) subtree_size_[idx(parent_[idx(*it)])] += subtree_size_[idx(*it)];
  }
}

DfsForest dfs_forest(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  const auto rank = ranks_of(order, n);
  std::vector<Vertex> parent(n, kNoParent);

  // Neighbor lists re-sorted by rank, scanned once each through a cursor:
  // a neighbor skipped as visited stays visited.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(static_cast<Vertex>(v));
  std::vector<Vertex> by_rank(offsets[n]);
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    auto out = by_rank.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    std::copy(nb.begin(), nb.end(), out);
    std::sort(out, out + static_cast<std::ptrdiff_t>(nb.size()),
              [&](Vertex a, Vertex b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
  }
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> stack;
  std::size_t next_root = 0;
  std::size_t remaining = n;
  while (remaining > 0) {
    if (stack.empty()) {
      while (visited[static_cast<std::size_t>(order[next_root])]) ++next_root;
      Vertex r = order[next_root];
      visited[static_cast<std::size_t>(r)] = 1;
      --remaining;
      stack.push_back(r);
      continue;
    }
    const auto v = static_cast<std::size_t>(stack.back());
    while (cursor[v] < offsets[v + 1] && visited[static_cast<std::size_t>(by_rank[cursor[v]])]) ++cursor[v];
    if (cursor[v] == offsets[v + 1]) {
      stack.pop_back();
      continue;
    }
    Vertex u = by_rank[cursor[v]];
    visited[static_cast<std::size_t>(u)] = 1;
    --remaining;
    parent[static_cast<std::size_t>(u)] = static_cast<Vertex>(v);
    stack.push_back(u);
  }
  return DfsForest::from_parents(std::vector<Vertex>(order.begin(), order.end()), std::move(parent));
}

bool check_back_edge_property(const Graph& g, const DfsForest& forest) {
  if (forest.size() != g.num_vertices()) throw InputError("forest and graph have different vertex counts");
  for (std::size_t v = 0; v < forest.size(); ++v) {
    Vertex p = forest.parent(static_cast<Vertex>(v));
    if (p != kNoParent && !g.has_edge(p, static_cast<Vertex>(v))) {
      throw InputError("forest edge (" + std::to_string(p) + "," + std::to_string(v) + ") is not an edge of the graph");
    }
  }
  for (const Edge& e : g.edges()) {
    if (!forest.is_ancestor(e.u, e.v) && !forest.is_ancestor(e.v, e.u)) return false;
  }
  return true;
}

SplitWitness split_under_vertex(const DfsForest& forest, Vertex tree_root, std::size_t k) {
  if (tree_root < 0 || static_cast<std::size_t>(tree_root) >= forest.size() || !forest.is_root(tree_root)) {
    throw InputError("vertex " + std::to_string(tree_root) + " is not a root of the forest");
  }
  if (k == 0) throw InputError("split size k must be positive");
  if (forest.subtree_size(tree_root) <= k) {
    throw PreconditionError("tree rooted at " + std::to_string(tree_root) + " has " +
                            std::to_string(forest.subtree_size(tree_root)) + " vertices, need more than k = " + std::to_string(k));
  }

  Vertex v = tree_root;
  for (;;) {
    auto kids = forest.children(v);
    auto big = std::find_if(kids.begin(), kids.end(), [&](Vertex u) { return forest.subtree_size(u) > k; });
    if (big == kids.end()) break;
    v = *big;
  }

  SplitWitness w;
  w.v = v;
  w.k = k;
  auto kids = forest.children(v);
  auto half = std::find_if(kids.begin(), kids.end(), [&](Vertex u) { return 2 * forest.subtree_size(u) >= k; });
  if (half != kids.end()) {
    w.children = {*half};
    w.total = forest.subtree_size(*half);
    return w;
  }
  for (Vertex u : kids) {
    if (w.total + forest.subtree_size(u) <= k) {
      w.children.push_back(u);
      w.total += forest.subtree_size(u);
    }
  }
  return w;
}

std::vector<Vertex> tree_path_to_root(const DfsForest& forest, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= forest.size()) throw InputError("vertex out of range for forest");
  std::vector<Vertex> path{v};
  while (!forest.is_root(path.back())) path.push_back(forest.parent(path.back()));
  return path;
}

}  // namespace locyc
