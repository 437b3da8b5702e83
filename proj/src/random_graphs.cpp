#include "locyc/random_graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "locyc/errors.hpp"
#include "locyc/rng.hpp"

namespace locyc {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// Tracks the largest scaled excess e * den - num * s seen so far.
class ExcessTracker {
 public:
  ExcessTracker(const Rational& c2, DensityReport& report) : c2_(c2), report_(report) {}

  // Returns true when (edges, size) is strictly worse than the current worst.
  bool offer(std::size_t edges, std::size_t size) {
    ++report_.examined;
    const std::int64_t scaled = static_cast<std::int64_t>(edges) * c2_.den() - c2_.num() * static_cast<std::int64_t>(size);
    if (scaled >= 0 && (!report_.first_violation_size || size < *report_.first_violation_size)) {
      report_.first_violation_size = size;
    }
    if (have_ && scaled <= best_) return false;
    have_ = true;
    best_ = scaled;
    report_.worst_edges = edges;
    return true;
  }

  void finish() {
    report_.worst_excess = static_cast<double>(best_) / static_cast<double>(c2_.den());
    report_.passed = best_ < 0;
  }

 private:
  Rational c2_;
  DensityReport& report_;
  bool have_ = false;
  std::int64_t best_ = 0;
};

std::size_t edges_within(const Graph& g, const std::vector<Vertex>& r, std::vector<char>& mark) {
  for (Vertex v : r) mark[at(v)] = 1;
  std::size_t twice = 0;
  for (Vertex v : r) {
    for (Vertex u : g.neighbors(v)) twice += mark[at(u)];
  }
  for (Vertex v : r) mark[at(v)] = 0;
  return twice / 2;
}

void audit_exhaustive(const Graph& g, std::size_t k_min, std::size_t k_max, ExcessTracker& tracker, DensityReport& report) {
  const std::size_t n = g.num_vertices();
  if (n > kExhaustiveAuditCap) {
    throw SizeCapError("exhaustive density audit is limited to " + std::to_string(kExhaustiveAuditCap) + " vertices");
  }
  const auto adj = adjacency_masks(g);
  // C(22, 2) = 231 edges fit in a byte.
  std::vector<std::uint8_t> edges(std::size_t{1} << n, 0);
  std::uint32_t worst = 0;
  for (std::uint32_t mask = 1; mask < edges.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint8_t>(edges[rest] + std::popcount(adj[low] & rest));
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < k_min || size > k_max) continue;
    if (tracker.offer(edges[mask], size)) worst = mask;
  }
  std::vector<Vertex> r;
  for (std::size_t v = 0; v < n; ++v) {
    if (worst >> v & 1u) r.push_back(static_cast<Vertex>(v));
  }
  report.worst_set = VertexSet::from_sorted(std::move(r));
}

void audit_sampled(const Graph& g, std::size_t k_min, std::size_t k_max, const DensityAuditOptions& options,
                   ExcessTracker& tracker, DensityReport& report) {
  const std::size_t n = g.num_vertices();
  Rng rng(options.seed);
  std::vector<char> mark(n, 0);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);

  for (std::size_t size = k_min; size <= k_max; ++size) {
    for (std::size_t s = 0; s < options.samples; ++s) {
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      std::vector<Vertex> r(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      if (tracker.offer(edges_within(g, r, mark), size)) report.worst_set = VertexSet::from_unsorted(std::move(r));
    }
  }

  // Greedy densification from each start vertex.
  std::vector<Vertex> starts;
  if (options.greedy_starts == 0 || options.greedy_starts >= n) {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0);
  } else {
    for (std::size_t i = 0; i < options.greedy_starts; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
    starts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(options.greedy_starts));
  }
  std::vector<std::size_t> gain(n, 0);
  std::vector<char> in(n, 0);
  std::vector<Vertex> grown;
  std::vector<Vertex> frontier;
  for (Vertex start : starts) {
    grown.clear();
    frontier.clear();
    std::size_t edges = 0;
    Vertex next = start;
    std::size_t next_unvisited = 0;
    while (grown.size() < k_max) {
      in[at(next)] = 1;
      grown.push_back(next);
      edges += gain[at(next)];
      for (Vertex u : g.neighbors(next)) {
        if (in[at(u)]) continue;
        if (gain[at(u)]++ == 0) frontier.push_back(u);
      }
      if (grown.size() >= k_min && tracker.offer(edges, grown.size())) report.worst_set = VertexSet::from_unsorted(grown);
      if (grown.size() == k_max) break;

      Vertex best = kNoParent;
      for (std::size_t i = 0; i < frontier.size();) {
        const Vertex cand = frontier[i];
        if (in[at(cand)]) {
          frontier[i] = frontier.back();
          frontier.pop_back();
          continue;
        }
        if (best == kNoParent || gain[at(cand)] > gain[at(best)] || (gain[at(cand)] == gain[at(best)] && cand < best)) {
          best = cand;
        }
        ++i;
      }
      if (best != kNoParent) {
        next = best;
      } else {
        while (in[next_unvisited]) ++next_unvisited;
        next = static_cast<Vertex>(next_unvisited);
      }
    }
    for (Vertex v : grown) {
      in[at(v)] = 0;
      for (Vertex u : g.neighbors(v)) gain[at(u)] = 0;
    }
  }

  // Minimum-degree peeling: the vertices still present after each removal.
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (std::size_t v = 0; v < n; ++v) buckets[deg[v]].push_back(static_cast<Vertex>(v));
  std::vector<char> removed(n, 0);
  std::vector<Vertex> removal;
  removal.reserve(n);
  std::size_t remaining_edges = g.num_edges();
  std::size_t cursor = 0;
  std::size_t best_prefix = n + 1;
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    if (remaining >= k_min && remaining <= k_max && tracker.offer(remaining_edges, remaining)) best_prefix = removal.size();
    cursor = cursor == 0 ? 0 : cursor - 1;
    Vertex v = kNoParent;
    while (v == kNoParent) {
      while (buckets[cursor].empty()) ++cursor;
      Vertex cand = buckets[cursor].back();
      buckets[cursor].pop_back();
      if (!removed[at(cand)] && deg[at(cand)] == cursor) v = cand;
    }
    removed[at(v)] = 1;
    removal.push_back(v);
    remaining_edges -= deg[at(v)];
    for (Vertex u : g.neighbors(v)) {
      if (removed[at(u)]) continue;
      buckets[--deg[at(u)]].push_back(u);
    }
  }
  if (best_prefix <= n) {
    std::vector<char> gone(n, 0);
    for (std::size_t i = 0; i < best_prefix; ++i) gone[at(removal[i])] = 1;
    std::vector<Vertex> r;
    for (std::size_t v = 0; v < n; ++v) {
      if (!gone[v]) r.push_back(static_cast<Vertex>(v));
    }
    report.worst_set = VertexSet::from_sorted(std::move(r));
  }
}

}  // namespace

Graph sample_gnp(const GnpSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  const std::size_t n = spec.n;
  if (spec.p == 0.0 || n < 2) return graphs::empty(n);
  if (spec.p == 1.0) return graphs::complete(n);

  Rng rng(spec.seed);
  const double log_q = std::log1p(-spec.p);
  std::vector<Edge> edges;
  const double expected = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * spec.p;
  edges.reserve(static_cast<std::size_t>(expected + 4.0 * std::sqrt(expected) + 16.0));
  // Pairs are numbered 0 .. C(n,2)-1 row by row; row u holds (u, u+1..n-1).
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t next = 0;
  std::uint64_t row_start = 0;
  std::size_t u = 0;
  while (next < total) {
    const double skip = std::floor(std::log1p(-rng.uniform01()) / log_q);
    if (skip >= static_cast<double>(total - next)) break;
    next += static_cast<std::uint64_t>(skip);
    while (next >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    const std::size_t v = u + 1 + static_cast<std::size_t>(next - row_start);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    ++next;
  }
  return Graph::from_edges(n, std::move(edges));
}

double delta_of(double c1, double c2) {
  if (!(c2 > 1.0) || !(c1 > c2)) throw InputError("delta needs c1 > c2 > 1");
  return std::pow(c2 / (5.0 * c1), c2 / (c2 - 1.0));
}

DensityReport audit_local_density(const Graph& g, const Rational& c2, std::size_t k_max, const DensityAuditOptions& options) {
  if (c2 <= Rational(0)) throw InputError("c2 must be positive");
  if (options.k_min == 0 || k_max < options.k_min) throw InputError("density audit needs 1 <= k_min <= k_max");
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("density audit needs a nonempty graph");
  DensityReport report;
  report.mode = options.mode;
  report.c2 = c2;
  report.k_min = options.k_min;
  report.k_max = std::min(k_max, n);
  report.heuristic = options.mode == AuditMode::kSampled;
  if (report.k_min > report.k_max) throw InputError("density audit size range is empty for this graph");
  ExcessTracker tracker(c2, report);
  if (options.mode == AuditMode::kExhaustive) {
    audit_exhaustive(g, report.k_min, report.k_max, tracker, report);
  } else {
    if (options.samples == 0) throw InputError("sampled audit needs at least one sample");
    audit_sampled(g, report.k_min, report.k_max, options, tracker, report);
  }
  tracker.finish();
  return report;
}

std::string_view coloring_name(Coloring coloring) {
  switch (coloring) {
    case Coloring::kUniform:
      return "uniform";
    case Coloring::kBalanced:
      return "balanced";
    case Coloring::kAdversarial:
      return "adversarial";
  }
  return "unknown";
}

Coloring parse_coloring(std::string_view name) {
  if (name == "uniform" || name == "uniform-random") return Coloring::kUniform;
  if (name == "balanced" || name == "balanced-greedy") return Coloring::kBalanced;
  if (name == "adversarial" || name == "adversarial-plugin") return Coloring::kAdversarial;
  throw InputError("unknown coloring strategy '" + std::string(name) + "'");
}

namespace {

struct UnionFind {
  std::vector<Vertex> parent;
  std::vector<std::size_t> size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  Vertex find(Vertex v) {
    while (parent[at(v)] != v) {
      parent[at(v)] = parent[at(parent[at(v)])];
      v = parent[at(v)];
    }
    return v;
  }

  std::size_t merged_size(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    return a == b ? size[at(a)] : size[at(a)] + size[at(b)];
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[at(a)] < size[at(b)]) std::swap(a, b);
    parent[at(b)] = a;
    size[at(a)] += size[at(b)];
  }
};

}  // namespace

std::vector<int> color_edges(const Graph& g, int r, Coloring coloring, std::uint64_t seed) {
  if (r < 1) throw InputError("number of colors must be at least 1");
  const std::size_t m = g.num_edges();
  const auto colors_count = static_cast<std::size_t>(r);
  Rng rng(seed);
  std::vector<int> colors(m, 1);
  if (coloring == Coloring::kUniform) {
    for (auto& c : colors) c = 1 + static_cast<int>(rng.below(colors_count));
    return colors;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order.begin(), order.end());
  std::vector<std::size_t> class_size(colors_count, 0);
  if (coloring == Coloring::kBalanced) {
    for (std::size_t e : order) {
      auto best = static_cast<std::size_t>(std::min_element(class_size.begin(), class_size.end()) - class_size.begin());
      colors[e] = static_cast<int>(best) + 1;
      ++class_size[best];
    }
    return colors;
  }
  std::vector<UnionFind> forests(colors_count, UnionFind(g.num_vertices()));
  for (std::size_t e : order) {
    const Edge& edge = g.edge(e);
    std::size_t best = 0;
    std::size_t best_merged = forests[0].merged_size(edge.u, edge.v);
    for (std::size_t c = 1; c < colors_count; ++c) {
      const std::size_t merged = forests[c].merged_size(edge.u, edge.v);
      if (merged < best_merged || (merged == best_merged && class_size[c] < class_size[best])) {
        best = c;
        best_merged = merged;
      }
    }
    forests[best].unite(edge.u, edge.v);
    ++class_size[best];
    colors[e] = static_cast<int>(best) + 1;
  }
  return colors;
}

Graph color_class(const Graph& g, const std::vector<int>& colors, int color) {
  if (colors.size() != g.num_edges()) throw InputError("coloring does not match the graph's edge count");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] == color) edges.push_back(g.edge(e));
  }
  return Graph::from_edges(g.num_vertices(), std::move(edges));
}

int majority_color(const std::vector<int>& colors, int r) {
  if (r < 1) throw InputError("number of colors must be at least 1");
  std::vector<std::size_t> count(static_cast<std::size_t>(r) + 1, 0);
  for (int c : colors) {
    if (c < 1 || c > r) throw InputError("edge color " + std::to_string(c) + " outside 1.." + std::to_string(r));
    ++count[static_cast<std::size_t>(c)];
  }
  return static_cast<int>(std::max_element(count.begin() + 1, count.end()) - count.begin());
}

MonochromaticReport monochromatic_cycle(const Graph& g, const std::vector<int>& colors, int r, const DensityParams& params) {
  params.check();
  MonochromaticReport report;
  report.r = r;
  report.color = majority_color(colors, r);
  report.graph_edges = g.num_edges();
  Graph cls = color_class(g, colors, report.color);
  report.class_edges = cls.num_edges();
  try {
    report.certificate = extract_cycle_density(cls, params);
  } catch (const HypothesisFailure& e) {
    report.failure = e.what();
  }
  return report;
}

MonochromaticReport monochromatic_cycle_experiment(const GnpSpec& spec, int r, Coloring coloring, const DensityParams& params) {
  const Graph g = sample_gnp(spec);
  const auto colors = color_edges(g, r, coloring, derive_seed(spec.seed, "coloring"));
  return monochromatic_cycle(g, colors, r, params);
}

std::vector<SparsityTrendPoint> local_sparsity_trend(const Rational& c1, const Rational& c2,
                                                     const std::vector<std::size_t>& sizes, std::size_t trials,
                                                     std::uint64_t seed) {
  std::vector<SparsityTrendPoint> points;
  for (std::size_t n : sizes) {
    SparsityTrendPoint point;
    point.n = n;
    point.trials = trials;
    const double p = std::min(1.0, c1.to_double() / static_cast<double>(n));
    for (std::size_t t = 0; t < trials; ++t) {
      const Graph g = sample_gnp({n, p, derive_seed(derive_seed(seed, n), t)});
      if (!audit_local_density(g, c2, n).passed) ++point.failures;
    }
    points.push_back(point);
  }
  return points;
}

}  // namespace locyc
