#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locyc/graph.hpp"
#include "locyc/random_graphs.hpp"
#include "locyc/rational.hpp"

namespace locyc {

/// Affine plane AG(2, q) over Z_q. Point (a, b) has id a*q + b. Lines with
/// slope s < q are {(x, s*x + t)} with id s*q + t; vertical lines x = c have
/// id q*q + c. Parallel class s < q holds the slope-s lines, class q the
/// vertical ones.
///
/// Only prime q is supported: a prime-power order needs GF(p^k) arithmetic
/// in point_on/line_through, which is where an extension would go.
class AffinePlane {
 public:
  std::size_t order() const noexcept { return q_; }
  std::size_t num_points() const noexcept { return q_ * q_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  std::size_t num_classes() const noexcept { return q_ + 1; }

  const std::vector<std::size_t>& line(std::size_t id) const { return lines_[id]; }
  std::size_t class_of(std::size_t line_id) const { return line_id / q_; }
  /// Line ids of parallel class c, in increasing order.
  std::vector<std::size_t> class_lines(std::size_t c) const;
  /// Unique line through two distinct points.
  std::size_t line_through(std::size_t x, std::size_t y) const;
  /// The q + 1 lines through point x, one per class.
  std::vector<std::size_t> lines_through(std::size_t x) const;

  friend AffinePlane build_affine_plane(std::size_t q);

 private:
  std::size_t q_ = 0;
  std::vector<std::vector<std::size_t>> lines_;
};

/// Throws UnsupportedOrder unless q is prime.
AffinePlane build_affine_plane(std::size_t q);

/// Checks point/line counts, line sizes, unique pair coverage and that each
/// class partitions the points. Empty when all hold.
std::optional<std::string> affine_plane_defect(const AffinePlane& plane);

struct RamseyColoring {
  int r = 0;
  std::size_t q = 0;
  std::size_t degree_threshold = 0;
  std::vector<int> colors;           // per edge id, in 1..r
  std::vector<std::size_t> part;     // per vertex: 0 for V0, else 1..q^2
  std::uint64_t seed = 0;
};

/// Default high-degree threshold 6 r^2.
std::size_t default_degree_threshold(int r);

/// V0 = vertices of degree >= threshold; the rest go to uniform parts 1..q^2,
/// q = r - 2. V0 edges get color r, edges inside a part color 1, and edges
/// between parts x, y color class(line through x, y) + 1. Throws
/// UnsupportedOrder unless r - 2 is prime, InputError on isolated vertices.
RamseyColoring lower_bound_coloring(const Graph& g, int r, std::uint64_t seed,
                                    std::optional<std::size_t> degree_threshold = std::nullopt);

/// First edge whose color disagrees with the construction.
std::optional<std::string> coloring_defect(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring);

/// First color class component (color i <= q+1) not contained in the union of
/// the parts of a single line of class i-1.
std::optional<std::string> confinement_defect(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring);

struct LowerBoundReport {
  std::size_t n_target = 0;
  std::vector<std::size_t> line_load;  // A_L per line id
  std::size_t max_load = 0;
  std::size_t load_sum = 0;
  std::size_t v0_size = 0;
  bool loads_below_target = false;  // every A_L < n_target - 1
  bool cover_below_half = false;    // |V0| < n_target / 2
  bool kills_path = false;          // both of the above
  std::vector<std::size_t> color_edges;  // index 1..r
};

/// A_L = edges with both ends in the union of the parts on L, for every line.
LowerBoundReport verify_lower_bound_coloring(const Graph& g, const AffinePlane& plane, const RamseyColoring& coloring,
                                             std::size_t n_target);

struct PathCheck {
  std::size_t vertices = 0;  // vertices on the path found
  bool exact = false;
  bool reaches_target = false;
};

/// Exact longest path (vertex count) for n <= kBruteForceCycleCap, otherwise
/// the longest of two DFS tree paths (the second sweep rooted at the deepest
/// vertex of the first) and an expander split cycle.
PathCheck mono_path_check(const Graph& g, std::size_t n_target);

struct UpperBoundColoringResult {
  Coloring coloring = Coloring::kUniform;
  int color = 0;
  std::size_t class_edges = 0;
  bool failed_sample = false;  // majority class below C n / 3
  std::optional<CycleCertificate> certificate;
  bool validated = false;
  std::string failure;
};

struct UpperBoundReport {
  std::size_t n = 0;
  int r = 0;
  Rational big_c;
  double p = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  bool vacuous = false;  // k < 4
  double n0 = 0.0;
  Rational c1;
  Rational c2;
  std::size_t graph_edges = 0;
  std::vector<UpperBoundColoringResult> results;
};

/// G(n, min(1, C r / n)); for each coloring, the majority class goes through
/// extract_cycle_density with c1 = C/3, c2 = C/4, k = floor(delta n),
/// delta = (20 r)^(-C/(C-4)). Requires C > 5 and r >= 2.
UpperBoundReport upper_bound_pipeline(std::size_t n, int r, const Rational& big_c, std::uint64_t seed,
                                      const std::vector<Coloring>& colorings);

}  // namespace locyc
