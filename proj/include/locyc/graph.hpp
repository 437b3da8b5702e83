#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace locyc {

using Vertex = std::int32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(from_unsorted(std::vector<Vertex>(ids))) {}

  static VertexSet from_unsorted(std::vector<Vertex> ids);
  /// Takes ownership of ids that are already strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form with each neighbor list sorted; the edge
/// list is sorted lexicographically and its positions serve as edge ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

  /// Rejects self-loops, out-of-range endpoints and repeated pairs.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[static_cast<std::size_t>(v)],
            nbrs_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  std::size_t degree(Vertex v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }
  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }
  /// Throws InputError when v is not a vertex of this graph.
  void check_vertex(Vertex v) const;
  void check_subset(const VertexSet& s) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Vertex> nbrs_;
};

/// Induced subgraph plus the map from its vertex ids back to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// { v not in W : v adjacent to some w in W }.
VertexSet external_neighborhood(const Graph& g, const VertexSet& w);

/// Number of edges with both endpoints in r.
std::size_t induced_edge_count(const Graph& g, const VertexSet& r);

/// Number of edges with at least one endpoint in w.
std::size_t incident_edge_count(const Graph& g, const VertexSet& w);

/// Maximal connected vertex sets, ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Largest graph longest_cycle_bruteforce accepts.
inline constexpr std::size_t kBruteForceCycleCap = 20;

/// Exact circumference (0 if acyclic). Exponential; n <= kBruteForceCycleCap.
std::size_t longest_cycle_bruteforce(const Graph& g);

/// Exact number of vertices on a longest path. Exponential; n <= kBruteForceCycleCap.
std::size_t longest_path_bruteforce(const Graph& g);

/// Per-vertex neighbor bitmasks for graphs with at most 32 vertices.
std::vector<std::uint32_t> adjacency_masks(const Graph& g);

namespace graphs {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
/// Sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Disjoint union; the second graph's ids are shifted by the first's order.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace graphs

}  // namespace locyc
