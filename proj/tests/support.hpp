#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "locyc/graph.hpp"
#include "locyc/rng.hpp"

namespace locyc::testing {

// Independent random graph: every pair flipped with its own coin.
inline Graph coin_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (rng.bernoulli(p)) edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

inline VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) ids.push_back(v);
  }
  return VertexSet::from_sorted(std::move(ids));
}

inline VertexSet random_subset(std::size_t n, Rng& rng) {
  std::vector<Vertex> ids;
  for (std::size_t v = 0; v < n; ++v) {
    if (rng.bernoulli(0.5)) ids.push_back(static_cast<Vertex>(v));
  }
  return VertexSet::from_sorted(std::move(ids));
}

// Edges with both ends in the mask, by scanning the edge list.
inline std::size_t edges_inside(const Graph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++count;
  }
  return count;
}

// Edges with at least one end in the mask.
inline std::size_t edges_touching(const Graph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1u) || (mask >> e.v & 1u)) ++count;
  }
  return count;
}

// Vertices outside the mask adjacent to it.
inline std::uint32_t outside_neighbors(const Graph& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (const Edge& e : g.edges()) {
    const bool a = mask >> e.u & 1u;
    const bool b = mask >> e.v & 1u;
    if (a && !b) out |= 1u << e.v;
    if (b && !a) out |= 1u << e.u;
  }
  return out;
}

// Minimum |N(W)| over floor(k/2) <= |W| <= k (at least 1), by plain enumeration.
inline std::size_t min_expansion(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  const std::size_t lo = std::max<std::size_t>(1, k / 2);
  std::size_t best = n;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < lo || size > k) continue;
    best = std::min(best, static_cast<std::size_t>(std::popcount(outside_neighbors(g, mask))));
  }
  return best;
}

}  // namespace locyc::testing
