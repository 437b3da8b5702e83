#include "locyc/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "locyc/errors.hpp"
#include "locyc/maxflow.hpp"
#include "locyc/rng.hpp"

namespace locyc {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// Builds the certificate for a split of `forest` (a DFS forest of g): W is the
// union of the split subtrees, every external neighbor of W is an ancestor of
// the split vertex, and the cycle runs from the deepest W-neighbor w of the
// highest such ancestor v* up the tree to v*, closed by the edge (w, v*).
CycleCertificate certificate_from_split(const Graph& g, const DfsForest& forest, const SplitWitness& split) {
  const std::size_t n = g.num_vertices();
  std::vector<char> mark(n, 0);  // 1 = in W, 2 = in N(W)
  std::vector<Vertex> w_ids;
  w_ids.reserve(split.total);
  for (Vertex c : split.children) {
    for (Vertex x : forest.subtree(c)) {
      mark[at(x)] = 1;
      w_ids.push_back(x);
    }
  }
  std::vector<Vertex> nbhd;
  for (Vertex x : w_ids) {
    for (Vertex y : g.neighbors(x)) {
      if (mark[at(y)] == 0) {
        mark[at(y)] = 2;
        nbhd.push_back(y);
      }
    }
  }

  Vertex v_star = split.v;
  for (Vertex y : nbhd) {
    if (!forest.is_ancestor(y, split.v)) {
      throw std::logic_error("external neighbor off the root path: forest is not a DFS forest of the graph");
    }
    if (forest.depth(y) < forest.depth(v_star)) v_star = y;
  }

  Vertex w = kNoParent;
  for (Vertex x : g.neighbors(v_star)) {
    if (mark[at(x)] != 1) continue;
    if (w == kNoParent || forest.depth(x) > forest.depth(w)) w = x;
  }

  CycleCertificate cert;
  for (Vertex x = w; x != v_star; x = forest.parent(x)) cert.cycle.push_back(x);
  cert.cycle.push_back(v_star);
  if (cert.cycle.size() < 3) {
    throw HypothesisFailure("no cycle closes through the split at vertex " + std::to_string(split.v) +
                            ": its only external neighbor is reached by tree edges alone");
  }
  cert.witness_w = VertexSet::from_unsorted(std::move(w_ids));
  cert.witness_path = tree_path_to_root(forest, split.v);
  std::reverse(cert.witness_path.begin(), cert.witness_path.end());
  cert.split_vertex = split.v;
  cert.v_star = v_star;
  cert.closing_edge = {w, v_star};
  cert.neighborhood_size = nbhd.size();
  cert.claimed_bound = nbhd.size() + 1;
  cert.k = split.k;
  return cert;
}

CycleCertificate remap(CycleCertificate cert, const std::vector<Vertex>& to_parent) {
  auto map = [&](Vertex v) { return to_parent[at(v)]; };
  for (Vertex& v : cert.cycle) v = map(v);
  for (Vertex& v : cert.witness_path) v = map(v);
  std::vector<Vertex> w;
  w.reserve(cert.witness_w.size());
  for (Vertex v : cert.witness_w) w.push_back(map(v));
  cert.witness_w = VertexSet::from_sorted(std::move(w));
  cert.split_vertex = map(cert.split_vertex);
  cert.v_star = map(cert.v_star);
  cert.closing_edge = {map(cert.closing_edge.u), map(cert.closing_edge.v)};
  return cert;
}

// Sum of |C| over a maximal collection of components is at least k/2 whenever
// every component is smaller than k/2 and |V| > k.
std::vector<Vertex> closed_witness(const std::vector<VertexSet>& comps, std::size_t k) {
  for (const auto& c : comps) {
    if (2 * c.size() >= k && c.size() <= k) return c.ids();
  }
  std::vector<Vertex> w;
  for (const auto& c : comps) {
    if (w.size() + c.size() <= k) w.insert(w.end(), c.begin(), c.end());
  }
  std::sort(w.begin(), w.end());
  return w;
}

std::size_t edges_leaving_unmarked(const Graph& g, std::span<const Vertex> w, std::vector<char>& mark) {
  for (Vertex x : w) mark[at(x)] = 1;
  std::size_t count = 0;
  std::vector<Vertex> touched;
  for (Vertex x : w) {
    for (Vertex y : g.neighbors(x)) {
      if (mark[at(y)] == 0) {
        mark[at(y)] = 2;
        touched.push_back(y);
        ++count;
      }
    }
  }
  for (Vertex x : w) mark[at(x)] = 0;
  for (Vertex y : touched) mark[at(y)] = 0;
  return count;
}

}  // namespace

std::optional<std::string> certificate_defect(const Graph& g, const CycleCertificate& cert) {
  const auto& c = cert.cycle;
  if (c.size() < 3) return "cycle has fewer than 3 vertices";
  for (Vertex v : c) {
    if (!g.contains(v)) return "cycle vertex " + std::to_string(v) + " out of range";
  }
  std::vector<Vertex> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "cycle repeats a vertex";
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i];
    Vertex b = c[(i + 1) % c.size()];
    if (!g.has_edge(a, b)) return "cycle vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent";
  }
  if (c.size() < cert.claimed_bound) return "cycle shorter than its claimed bound";
  if (cert.claimed_bound != cert.neighborhood_size + 1) return "claimed bound is not |N(W)| + 1";
  if (std::find(cert.witness_path.begin(), cert.witness_path.end(), cert.v_star) == cert.witness_path.end()) {
    return "v_star is not on the witness path";
  }
  if (cert.witness_path.empty() || cert.witness_path.back() != cert.split_vertex) return "witness path does not end at the split vertex";
  if (cert.closing_edge.v != cert.v_star) return "closing edge does not end at v_star";
  if (!g.has_edge(cert.closing_edge.u, cert.closing_edge.v)) return "closing edge is not an edge of the graph";
  if (!cert.witness_w.contains(cert.closing_edge.u)) return "closing edge does not start in W";
  if (c.front() != cert.closing_edge.u || c.back() != cert.v_star) return "cycle is not closed by the closing edge";
  return std::nullopt;
}

void DensityParams::check() const {
  if (!(c2 > Rational(1)) || !(c1 > c2)) {
    throw InputError("density parameters need c1 > c2 > 1, got c1 = " + c1.to_string() + ", c2 = " + c2.to_string());
  }
  if (k == 0) throw InputError("density parameter k must be positive");
}

double DensityParams::guarantee_slack() const {
  return (static_cast<double>(k) / 2.0 - 1.0) * (std::sqrt(c1.to_double() / c2.to_double()) - 1.0);
}

CycleCertificate extract_cycle_expander(const Graph& g, std::size_t k) {
  auto order = identity_order(g.num_vertices());
  return extract_cycle_expander(g, k, order);
}

CycleCertificate extract_cycle_expander(const Graph& g, std::size_t k, std::span<const Vertex> order) {
  if (k == 0) throw InputError("k must be positive");
  if (g.num_vertices() <= k) {
    throw PreconditionError("graph has " + std::to_string(g.num_vertices()) + " vertices, need more than k = " + std::to_string(k));
  }
  const auto forest = dfs_forest(g, order);
  auto root = std::find_if(forest.roots().begin(), forest.roots().end(),
                           [&](Vertex r) { return forest.subtree_size(r) > k; });
  if (root == forest.roots().end()) {
    auto witness = closed_witness(connected_components(g), k);
    throw ExpansionViolated("no connected component has more than k = " + std::to_string(k) +
                                " vertices; a union of components with empty neighborhood has " +
                                std::to_string(witness.size()) + " vertices",
                            std::move(witness));
  }
  return certificate_from_split(g, forest, split_under_vertex(forest, *root, k));
}

ExpansionAudit audit_expansion(const Graph& g, std::size_t k, AuditMode mode, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (k == 0) throw InputError("k must be positive");
  if (n <= k) throw PreconditionError("expansion audit needs more than k vertices");
  ExpansionAudit audit;
  audit.mode = mode;
  audit.min_size = std::max<std::size_t>(1, k / 2);
  audit.max_size = k;
  audit.min_neighborhood = std::numeric_limits<std::size_t>::max();

  if (mode == AuditMode::kExhaustive) {
    if (n > kExhaustiveAuditCap) {
      throw SizeCapError("exhaustive expansion audit is limited to " + std::to_string(kExhaustiveAuditCap) + " vertices");
    }
    const auto adj = adjacency_masks(g);
    std::vector<std::uint32_t> nb(std::size_t{1} << n, 0);
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < nb.size(); ++mask) {
      const std::uint32_t low = mask & (0u - mask);
      nb[mask] = nb[mask ^ low] | adj[static_cast<std::size_t>(std::countr_zero(low))];
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < audit.min_size || size > audit.max_size) continue;
      ++audit.examined;
      const auto value = static_cast<std::size_t>(std::popcount(nb[mask] & ~mask));
      if (value < audit.min_neighborhood) {
        audit.min_neighborhood = value;
        best_mask = mask;
      }
    }
    std::vector<Vertex> w;
    for (std::size_t v = 0; v < n; ++v) {
      if (best_mask >> v & 1u) w.push_back(static_cast<Vertex>(v));
    }
    audit.witness = VertexSet::from_sorted(std::move(w));
    return audit;
  }

  if (samples == 0) throw InputError("sampled audit needs at least one sample");
  Rng rng(seed);
  std::vector<char> mark(n, 0);
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
  auto consider = [&](std::vector<Vertex> w) {
    ++audit.examined;
    const std::size_t value = edges_leaving_unmarked(g, w, mark);
    if (value < audit.min_neighborhood) {
      audit.min_neighborhood = value;
      audit.witness = VertexSet::from_unsorted(std::move(w));
    }
  };
  for (std::size_t size = audit.min_size; size <= audit.max_size; ++size) {
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      consider(std::vector<Vertex>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));

      // Connected growth: add a random external neighbor, or a random vertex
      // when the grown set has none.
      std::vector<Vertex> grown{static_cast<Vertex>(rng.below(n))};
      std::vector<char> in(n, 0);
      in[at(grown[0])] = 1;
      std::vector<Vertex> frontier;
      while (grown.size() < size) {
        frontier.clear();
        for (Vertex x : grown) {
          for (Vertex y : g.neighbors(x)) {
            if (!in[at(y)]) frontier.push_back(y);
          }
        }
        Vertex next;
        if (!frontier.empty()) {
          next = frontier[rng.below(frontier.size())];
        } else {
          do {
            next = static_cast<Vertex>(rng.below(n));
          } while (in[at(next)]);
        }
        in[at(next)] = 1;
        grown.push_back(next);
      }
      consider(std::move(grown));
    }
  }
  return audit;
}

std::optional<VertexSet> find_violating_set(const Graph& g, const Rational& c1) {
  if (c1 <= Rational(0)) throw InputError("c1 must be positive, got " + c1.to_string());
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (n == 0) return std::nullopt;
  const MaxFlow::Capacity vertex_cap = c1.num();
  const MaxFlow::Capacity edge_cap = c1.den();
  const MaxFlow::Capacity unbounded = vertex_cap * static_cast<MaxFlow::Capacity>(n) + 1;

  const std::size_t source = 0;
  const std::size_t sink = n + m + 1;
  MaxFlow flow(n + m + 2);
  flow.reserve_arcs(n + 3 * m);
  for (std::size_t v = 0; v < n; ++v) flow.add_arc(source, 1 + v, vertex_cap);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    flow.add_arc(1 + at(edge.u), 1 + n + e, unbounded);
    flow.add_arc(1 + at(edge.v), 1 + n + e, unbounded);
    flow.add_arc(1 + n + e, sink, edge_cap);
  }
  const MaxFlow::Capacity value = flow.solve(source, sink);
  if (value == vertex_cap * static_cast<MaxFlow::Capacity>(n)) return std::nullopt;

  const auto side = flow.source_side(source);
  std::vector<Vertex> w;
  for (std::size_t v = 0; v < n; ++v) {
    if (side[1 + v]) w.push_back(static_cast<Vertex>(v));
  }
  return VertexSet::from_sorted(std::move(w));
}

namespace {

// Repeatedly drops vertices whose current degree is below c1: each is a
// violating singleton of the current induced subgraph.
std::vector<Vertex> peel_low_degree(const Graph& g, const Rational& c1) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> stack;
  auto low = [&](std::size_t d) { return compare_scaled(static_cast<std::int64_t>(d), c1, 1) < 0; };
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (low(deg[v])) {
      gone[v] = 1;
      stack.push_back(static_cast<Vertex>(v));
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (gone[at(u)]) continue;
      if (low(--deg[at(u)])) {
        gone[at(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<Vertex> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) kept.push_back(static_cast<Vertex>(v));
  }
  return kept;
}

bool min_degree_certifies(const Graph& g, const Rational& c1) {
  // incident(W) >= (sum of degrees over W) / 2 >= c1 |W| when every degree is at least 2 c1.
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (compare_scaled(static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v))), c1, 2) < 0) return false;
  }
  return true;
}

}  // namespace

DenseCore find_dense_core(const Graph& g, const Rational& c1) {
  if (c1 <= Rational(0)) throw InputError("c1 must be positive, got " + c1.to_string());
  if (g.num_vertices() == 0 ||
      compare_scaled(static_cast<std::int64_t>(g.num_edges()), c1, static_cast<std::int64_t>(g.num_vertices())) < 0) {
    throw PreconditionError("graph has " + std::to_string(g.num_edges()) + " edges on " + std::to_string(g.num_vertices()) +
                            " vertices, below the density c1 = " + c1.to_string());
  }

  std::vector<Vertex> current(g.num_vertices());
  for (std::size_t v = 0; v < current.size(); ++v) current[v] = static_cast<Vertex>(v);
  for (;;) {
    Subgraph h = induced_subgraph(g, VertexSet::from_sorted(current));
    auto to_parent = [&](const std::vector<Vertex>& local) {
      std::vector<Vertex> out;
      out.reserve(local.size());
      for (Vertex v : local) out.push_back(h.to_parent[at(v)]);
      return out;
    };

    auto kept = peel_low_degree(h.graph, c1);
    if (kept.size() != h.graph.num_vertices()) {
      current = to_parent(kept);
      continue;
    }
    if (!min_degree_certifies(h.graph, c1)) {
      if (auto w = find_violating_set(h.graph, c1)) {
        // w holds local ids, which index `current`.
        std::vector<Vertex> rest;
        std::vector<char> drop(current.size(), 0);
        for (Vertex v : *w) drop[at(v)] = 1;
        for (std::size_t i = 0; i < current.size(); ++i) {
          if (!drop[i]) rest.push_back(current[i]);
        }
        current = std::move(rest);
        continue;
      }
    }
    auto comps = connected_components(h.graph);
    if (comps.size() > 1) {
      std::size_t best = 0;
      std::size_t best_edges = induced_edge_count(h.graph, comps[0]);
      for (std::size_t i = 1; i < comps.size(); ++i) {
        const std::size_t e = induced_edge_count(h.graph, comps[i]);
        // e / |C_i| > best_edges / |C_best|, exactly.
        if (e * comps[best].size() > best_edges * comps[i].size()) {
          best = i;
          best_edges = e;
        }
      }
      current = to_parent(comps[best].ids());
      continue;
    }
    DenseCore core;
    core.vertices = VertexSet::from_sorted(std::move(current));
    core.edge_count = h.graph.num_edges();
    core.ratio = static_cast<double>(core.edge_count) / static_cast<double>(core.vertices.size());
    return core;
  }
}

CycleCertificate extract_cycle_density(const Graph& g, const DensityParams& params) {
  params.check();
  const std::size_t n = g.num_vertices();
  if (n <= params.k) {
    throw PreconditionError("graph has " + std::to_string(n) + " vertices, need more than k = " + std::to_string(params.k));
  }
  const DenseCore core = find_dense_core(g, params.c1);
  if (core.vertices.size() <= params.k) {
    throw DensityInsufficient("dense core has " + std::to_string(core.vertices.size()) +
                              " vertices, need more than k = " + std::to_string(params.k));
  }
  Subgraph sub = induced_subgraph(g, core.vertices);
  const auto forest = dfs_forest(sub.graph, identity_order(sub.graph.num_vertices()));
  auto split = split_under_vertex(forest, forest.roots().front(), params.k);
  return remap(certificate_from_split(sub.graph, forest, split), sub.to_parent);
}

DenseSubset dense_subset_oracle(const Graph& g, std::size_t k1) {
  const std::size_t n = g.num_vertices();
  if (n > kDenseSubsetCap) throw SizeCapError("dense subset oracle is limited to " + std::to_string(kDenseSubsetCap) + " vertices");
  if (k1 == 0 || k1 >= n) throw InputError("k1 must satisfy 1 <= k1 < n");
  const auto adj = adjacency_masks(g);
  DenseSubset result;
  std::uint32_t best_mask = 0;
  bool first = true;
  // Gosper's hack: all n-bit masks with exactly k1 bits, in increasing order.
  for (std::uint32_t mask = (1u << k1) - 1; mask < (1u << n);) {
    std::size_t twice = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      twice += static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask));
    }
    if (first || twice / 2 > result.count) {
      result.count = twice / 2;
      best_mask = mask;
      first = false;
    }
    const std::uint32_t c = mask & (0u - mask);
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::vector<Vertex> r;
  for (std::size_t v = 0; v < n; ++v) {
    if (best_mask >> v & 1u) r.push_back(static_cast<Vertex>(v));
  }
  result.r = VertexSet::from_sorted(std::move(r));
  const double ratio = static_cast<double>(k1 - 1) / static_cast<double>(n - 1);
  result.bound = static_cast<double>(g.num_edges()) * ratio * ratio;
  // count > m ((k1-1)/(n-1))^2, compared in integers.
  result.confirmed = result.count * (n - 1) * (n - 1) > g.num_edges() * (k1 - 1) * (k1 - 1);
  return result;
}

}  // namespace locyc
