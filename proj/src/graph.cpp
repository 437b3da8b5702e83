#include "locyc/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "locyc/errors.hpp"

namespace locyc {

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) throw InputError("vertex set is not strictly increasing");
  }
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has an endpoint outside 0.." +
                       std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
  }
  for (Edge& e : edges) e = Edge::of(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("repeated edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[static_cast<std::size_t>(e.u) + 1];
    ++offsets[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> nbrs(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  // Edges are sorted by (u, v), so appending in this order leaves every list sorted.
  for (const Edge& e : edges) nbrs[fill[static_cast<std::size_t>(e.u)]++] = e.v;
  for (const Edge& e : edges) nbrs[fill[static_cast<std::size_t>(e.v)]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }

  g.edges_ = std::move(edges);
  g.offsets_ = std::move(offsets);
  g.nbrs_ = std::move(nbrs);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  Edge key = Edge::of(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("vertex id " + std::to_string(v) + " out of range 0.." + std::to_string(n_) + "-1");
  }
}

void Graph::check_subset(const VertexSet& s) const {
  if (s.empty()) return;
  check_vertex(s[0]);
  check_vertex(s[s.size() - 1]);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  g.check_subset(vertices);
  std::vector<Vertex> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex v : vertices) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u && local[static_cast<std::size_t>(u)] >= 0) {
        edges.push_back(Edge::of(local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(u)]));
      }
    }
  }
  return {Graph::from_edges(vertices.size(), std::move(edges)), vertices.ids()};
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& w) {
  g.check_subset(w);
  std::vector<char> in_w(g.num_vertices(), 0);
  for (Vertex v : w) in_w[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v : w) {
    for (Vertex u : g.neighbors(v)) {
      if (in_w[static_cast<std::size_t>(u)] == 0) {
        in_w[static_cast<std::size_t>(u)] = 2;
        out.push_back(u);
      }
    }
  }
  return VertexSet::from_unsorted(std::move(out));
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& r) {
  g.check_subset(r);
  std::size_t twice = 0;
  for (Vertex v : r) {
    for (Vertex u : g.neighbors(v)) twice += r.contains(u) ? 1 : 0;
  }
  return twice / 2;
}

std::size_t incident_edge_count(const Graph& g, const VertexSet& w) {
  g.check_subset(w);
  std::size_t degree_sum = 0;
  for (Vertex v : w) degree_sum += g.degree(v);
  // Edges inside W were counted twice.
  return degree_sum - induced_edge_count(g, w);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    out.push_back(VertexSet::from_unsorted(std::move(comp)));
  }
  return out;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > 32) throw SizeCapError("bitmask routines need at most 32 vertices");
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return adj;
}

namespace {

void check_bruteforce_cap(const Graph& g) {
  if (g.num_vertices() > kBruteForceCycleCap) {
    throw SizeCapError("brute-force search is limited to " + std::to_string(kBruteForceCycleCap) + " vertices, got " +
                       std::to_string(g.num_vertices()));
  }
}

}  // namespace

// reach[S] holds the endpoints v such that some path starts at the anchor,
// visits exactly S (plus the anchor) and ends at v. A cycle through the anchor
// as its smallest vertex closes whenever such an endpoint is adjacent to it.
std::size_t longest_cycle_bruteforce(const Graph& g) {
  check_bruteforce_cap(g);
  const std::size_t n = g.num_vertices();
  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  std::vector<std::uint32_t> reach;
  for (std::size_t s = 0; s + 2 < n; ++s) {
    if (g.degree(static_cast<Vertex>(s)) < 2) continue;
    const std::size_t width = n - s - 1;
    if (width + 1 <= best) break;
    // Bits are relative: bit i stands for vertex s + 1 + i.
    const std::uint32_t anchor_nbrs = adj[s] >> (s + 1);
    std::vector<std::uint32_t> rel_adj(width);
    for (std::size_t i = 0; i < width; ++i) rel_adj[i] = adj[s + 1 + i] >> (s + 1);
    reach.assign(std::size_t{1} << width, 0);
    for (std::size_t i = 0; i < width; ++i) {
      if (anchor_nbrs >> i & 1u) reach[std::size_t{1} << i] = 1u << i;
    }
    for (std::size_t sub = 1; sub < reach.size(); ++sub) {
      std::uint32_t ends = reach[sub];
      if (ends == 0) continue;
      const auto size = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(sub)));
      if (size >= 2 && (ends & anchor_nbrs) != 0) best = std::max(best, size + 1);
      while (ends != 0) {
        const int v = std::countr_zero(ends);
        ends &= ends - 1;
        std::uint32_t next = rel_adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(sub);
        while (next != 0) {
          const int u = std::countr_zero(next);
          next &= next - 1;
          reach[sub | (std::size_t{1} << u)] |= 1u << u;
        }
      }
    }
  }
  return best;
}

std::size_t longest_path_bruteforce(const Graph& g) {
  check_bruteforce_cap(g);
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  // ends[S]: vertices v such that a path covering exactly S ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  std::size_t best = 1;
  for (std::size_t v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  for (std::size_t sub = 1; sub < ends.size(); ++sub) {
    std::uint32_t e = ends[sub];
    if (e == 0) continue;
    best = std::max(best, static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(sub))));
    while (e != 0) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(sub);
      while (next != 0) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        ends[sub | (std::size_t{1} << u)] |= 1u << u;
      }
    }
  }
  return best;
}

namespace graphs {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back(Edge::of(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)));
  return Graph::from_edges(n, std::move(edges));
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(a + v)});
  }
  return Graph::from_edges(a + b, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace graphs

}  // namespace locyc
