#include "locyc/ramsey.hpp"

#include <algorithm>
#include <cmath>

#include "locyc/errors.hpp"
#include "locyc/rng.hpp"

namespace locyc {

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::size_t inverse_mod(std::size_t x, std::size_t q) {
  // Fermat: x^(q-2) mod q.
  std::size_t result = 1;
  std::size_t base = x % q;
  for (std::size_t e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return result;
}

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

AffinePlane build_affine_plane(std::size_t q) {
  if (!is_prime(q)) {
    throw UnsupportedOrder("affine plane of order " + std::to_string(q) +
                           " is not supported: only prime orders are implemented");
  }
  AffinePlane plane;
  plane.q_ = q;
  plane.lines_.resize(q * q + q);
  for (std::size_t s = 0; s < q; ++s) {
    for (std::size_t t = 0; t < q; ++t) {
      auto& line = plane.lines_[s * q + t];
      for (std::size_t x = 0; x < q; ++x) line.push_back(x * q + (s * x + t) % q);
    }
  }
  for (std::size_t c = 0; c < q; ++c) {
    auto& line = plane.lines_[q * q + c];
    for (std::size_t y = 0; y < q; ++y) line.push_back(c * q + y);
  }
  return plane;
}

std::vector<std::size_t> AffinePlane::class_lines(std::size_t c) const {
  if (c > q_) throw InputError("parallel class index out of range");
  std::vector<std::size_t> ids(q_);
  for (std::size_t t = 0; t < q_; ++t) ids[t] = c * q_ + t;
  return ids;
}

std::size_t AffinePlane::line_through(std::size_t x, std::size_t y) const {
  if (x == y || x >= num_points() || y >= num_points()) throw InputError("line_through needs two distinct points");
  const std::size_t a1 = x / q_, b1 = x % q_;
  const std::size_t a2 = y / q_, b2 = y % q_;
  if (a1 == a2) return q_ * q_ + a1;
  const std::size_t s = (b2 + q_ - b1) % q_ * inverse_mod((a2 + q_ - a1) % q_, q_) % q_;
  const std::size_t t = (b1 + q_ * q_ - s * a1 % q_) % q_;
  return s * q_ + t;
}

std::vector<std::size_t> AffinePlane::lines_through(std::size_t x) const {
  const std::size_t a = x / q_, b = x % q_;
  std::vector<std::size_t> ids;
  ids.reserve(q_ + 1);
  for (std::size_t s = 0; s < q_; ++s) ids.push_back(s * q_ + (b + q_ * q_ - s * a % q_) % q_);
  ids.push_back(q_ * q_ + a);
  return ids;
}

std::optional<std::string> affine_plane_defect(const AffinePlane& plane) {
  const std::size_t q = plane.order();
  const std::size_t points = plane.num_points();
  if (points != q * q) return "point count is not q^2";
  if (plane.num_lines() != q * q + q) return "line count is not q^2 + q";
  std::vector<std::size_t> pair_count(points * points, 0);
  for (std::size_t id = 0; id < plane.num_lines(); ++id) {
    const auto& line = plane.line(id);
    if (line.size() != q) return "line " + std::to_string(id) + " does not have q points";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] >= points) return "line " + std::to_string(id) + " has a point out of range";
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        if (line[i] == line[j]) return "line " + std::to_string(id) + " repeats a point";
        ++pair_count[std::min(line[i], line[j]) * points + std::max(line[i], line[j])];
      }
    }
  }
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = x + 1; y < points; ++y) {
      if (pair_count[x * points + y] != 1) {
        return "points " + std::to_string(x) + " and " + std::to_string(y) + " lie on " +
               std::to_string(pair_count[x * points + y]) + " lines";
      }
    }
  }
  for (std::size_t c = 0; c < plane.num_classes(); ++c) {
    std::vector<char> covered(points, 0);
    const auto ids = plane.class_lines(c);
    if (ids.size() != q) return "class " + std::to_string(c) + " does not have q lines";
    for (std::size_t id : ids) {
      if (plane.class_of(id) != c) return "line " + std::to_string(id) + " reports the wrong class";
      for (std::size_t x : plane.line(id)) {
        if (covered[x]++) return "class " + std::to_string(c) + " covers point " + std::to_string(x) + " twice";
      }
    }
  }
  return std::nullopt;
}

std::size_t default_degree_threshold(int r) { return 6 * static_cast<std::size_t>(r) * static_cast<std::size_t>(r); }

RamseyColoring lower_bound_coloring(const Graph& g, int r, std::uint64_t seed, std::optional<std::size_t> degree_threshold) {
  if (r < 3) throw InputError("lower-bound coloring needs r >= 3");
  const auto q = static_cast<std::size_t>(r - 2);
  const AffinePlane plane = build_affine_plane(q);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) == 0) throw InputError("vertex " + std::to_string(v) + " is isolated");
  }
  RamseyColoring coloring;
  coloring.r = r;
  coloring.q = q;
  coloring.degree_threshold = degree_threshold.value_or(default_degree_threshold(r));
  coloring.seed = seed;
  coloring.part.assign(g.num_vertices(), 0);
  Rng rng(seed);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) < coloring.degree_threshold) coloring.part[v] = 1 + rng.below(q * q);
  }
  coloring.colors.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const std::size_t x = coloring.part[at(g.edge(e).u)];
    const std::size_t y = coloring.part[at(g.edge(e).v)];
    if (x == 0 || y == 0) {
      coloring.colors[e] = r;
    } else if (x == y) {
      coloring.colors[e] = 1;
    } else {
      coloring.colors[e] = static_cast<int>(plane.class_of(plane.line_through(x - 1, y - 1))) + 1;
    }
  }
  return coloring;
}

std::optional<std::string> coloring_defect(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring) {
  if (coloring.colors.size() != g.num_edges() || coloring.part.size() != g.num_vertices()) {
    return "coloring does not match the graph";
  }
  if (plane.order() != coloring.q) return "coloring and plane have different orders";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (coloring.part[v] > coloring.q * coloring.q) return "vertex " + std::to_string(v) + " has an invalid part";
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const std::size_t x = coloring.part[at(edge.u)];
    const std::size_t y = coloring.part[at(edge.v)];
    int expected = 1;
    if (x == 0 || y == 0) {
      expected = coloring.r;
    } else if (x != y) {
      expected = static_cast<int>(plane.class_of(plane.line_through(x - 1, y - 1))) + 1;
    }
    if (coloring.colors[e] != expected) {
      return "edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ") has color " +
             std::to_string(coloring.colors[e]) + ", expected " + std::to_string(expected);
    }
  }
  return std::nullopt;
}

std::optional<std::string> confinement_defect(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring) {
  const std::size_t q = plane.order();
  for (int color = 1; color <= static_cast<int>(q) + 1; ++color) {
    const Graph cls = color_class(g, coloring.colors, color);
    for (const auto& comp : connected_components(cls)) {
      if (comp.size() < 2) continue;
      std::vector<std::size_t> parts;
      for (Vertex v : comp) {
        if (coloring.part[at(v)] == 0) return "color " + std::to_string(color) + " touches V0 at vertex " + std::to_string(v);
        parts.push_back(coloring.part[at(v)] - 1);
      }
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      if (parts.size() < 2) continue;
      const std::size_t line = plane.line_through(parts[0], parts[1]);
      const std::string where = "color " + std::to_string(color) + " component at vertex " + std::to_string(comp[0]);
      if (plane.class_of(line) + 1 != static_cast<std::size_t>(color)) return where + " spans a line of another class";
      const auto& points = plane.line(line);
      for (std::size_t x : parts) {
        if (std::find(points.begin(), points.end(), x) == points.end()) return where + " leaves its line";
      }
    }
  }
  return std::nullopt;
}

LowerBoundReport verify_lower_bound_coloring(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring,
                                             std::size_t n_target) {
  if (coloring.colors.size() != g.num_edges() || coloring.part.size() != g.num_vertices()) {
    throw InputError("coloring does not match the graph");
  }
  LowerBoundReport report;
  report.n_target = n_target;
  report.line_load.assign(plane.num_lines(), 0);
  report.color_edges.assign(static_cast<std::size_t>(coloring.r) + 1, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ++report.color_edges[static_cast<std::size_t>(coloring.colors[e])];
    const std::size_t x = coloring.part[at(g.edge(e).u)];
    const std::size_t y = coloring.part[at(g.edge(e).v)];
    if (x == 0 || y == 0) continue;
    if (x == y) {
      for (std::size_t line : plane.lines_through(x - 1)) ++report.line_load[line];
    } else {
      ++report.line_load[plane.line_through(x - 1, y - 1)];
    }
  }
  for (std::size_t load : report.line_load) {
    report.max_load = std::max(report.max_load, load);
    report.load_sum += load;
  }
  report.v0_size = static_cast<std::size_t>(std::count(coloring.part.begin(), coloring.part.end(), std::size_t{0}));
  report.loads_below_target = report.max_load + 1 < n_target;
  report.cover_below_half = 2 * report.v0_size < n_target;
  report.kills_path = report.loads_below_target && report.cover_below_half;
  return report;
}

PathCheck mono_path_check(const Graph& g, std::size_t n_target) {
  PathCheck check;
  if (g.num_vertices() <= kBruteForceCycleCap) {
    check.vertices = longest_path_bruteforce(g);
    check.exact = true;
  } else {
    // Two sweeps: the second roots each tree at the deepest vertex of the first.
    const auto first = dfs_forest(g, identity_order(g.num_vertices()));
    std::vector<Vertex> order = identity_order(g.num_vertices());
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return first.depth(a) > first.depth(b); });
    const auto second = dfs_forest(g, order);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      const auto x = static_cast<Vertex>(v);
      check.vertices = std::max({check.vertices, first.depth(x) + 1, second.depth(x) + 1});
    }
    std::size_t largest = 0;
    for (const auto& comp : connected_components(g)) largest = std::max(largest, comp.size());
    if (largest >= 2) {
      try {
        check.vertices = std::max(check.vertices, extract_cycle_expander(g, largest - 1).length());
      } catch (const HypothesisFailure&) {
        // Acyclic split; the tree path stands.
      }
    }
  }
  check.reaches_target = check.vertices >= n_target;
  return check;
}

UpperBoundReport upper_bound_pipeline(std::size_t n, int r, const Rational& big_c, std::uint64_t seed,
                                      const std::vector<Coloring>& colorings) {
  if (!(big_c > Rational(5))) throw InputError("upper-bound pipeline needs C > 5");
  if (r < 2) throw InputError("upper-bound pipeline needs r >= 2");
  if (n == 0) throw InputError("upper-bound pipeline needs n >= 1");
  UpperBoundReport report;
  report.n = n;
  report.r = r;
  report.big_c = big_c;
  const double c = big_c.to_double();
  report.p = std::min(1.0, c * r / static_cast<double>(n));
  const double exponent = c / (c - 4.0);
  report.delta = std::pow(20.0 * r, -exponent);
  report.k = static_cast<std::size_t>(std::floor(report.delta * static_cast<double>(n)));
  report.vacuous = report.k < 4;
  report.n0 = std::pow(1.0 / (400.0 * r), exponent) * static_cast<double>(n);
  report.c1 = big_c / Rational(3);
  report.c2 = big_c / Rational(4);

  const Graph g = sample_gnp({n, report.p, seed});
  report.graph_edges = g.num_edges();
  for (Coloring coloring : colorings) {
    UpperBoundColoringResult result;
    result.coloring = coloring;
    const auto colors = color_edges(g, r, coloring, derive_seed(seed, coloring_name(coloring)));
    result.color = majority_color(colors, r);
    const Graph cls = color_class(g, colors, result.color);
    result.class_edges = cls.num_edges();
    if (compare_scaled(3 * static_cast<std::int64_t>(result.class_edges), big_c, static_cast<std::int64_t>(n)) < 0) {
      result.failed_sample = true;
      result.failure = "majority class has fewer than C n / 3 edges";
    } else if (report.k == 0) {
      result.failure = "k = floor(delta n) = 0: no split size available";
    } else {
      try {
        result.certificate = extract_cycle_density(cls, {report.c1, report.c2, report.k});
        result.validated = validate_certificate(cls, *result.certificate);
      } catch (const HypothesisFailure& e) {
        result.failure = e.what();
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace locyc
