#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locyc/cycles.hpp"
#include "locyc/graph.hpp"
#include "locyc/rational.hpp"

namespace locyc {

struct GnpSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Binomial random graph. Pairs (u, v), u < v, are visited in lexicographic
/// order and the gaps between chosen pairs are drawn geometrically from
/// Rng::uniform01, so the result is fixed by (n, p, seed, generator version).
/// Throws InputError unless 0 <= p <= 1.
Graph sample_gnp(const GnpSpec& spec);

/// (c2 / (5 c1))^(c2 / (c2 - 1)). Throws InputError unless c1 > c2 > 1.
double delta_of(double c1, double c2);

/// Largest excess e(R) - c2 |R| over the examined sets R with
/// k_min <= |R| <= k_max.
struct DensityReport {
  AuditMode mode = AuditMode::kExhaustive;
  Rational c2;
  std::size_t k_min = 1;
  std::size_t k_max = 0;
  VertexSet worst_set;
  std::size_t worst_edges = 0;
  double worst_excess = 0.0;
  bool passed = false;     // worst_excess < 0
  bool heuristic = false;  // sampled mode: a pass is not a proof
  std::size_t examined = 0;
  /// Smallest examined size at which some R has e(R) >= c2 |R|.
  std::optional<std::size_t> first_violation_size;
};

struct DensityAuditOptions {
  AuditMode mode = AuditMode::kExhaustive;
  std::size_t k_min = 1;
  std::size_t samples = 64;        // uniform subsets per size (sampled mode)
  std::size_t greedy_starts = 0;   // 0: densify from every vertex
  std::uint64_t seed = 0;
};

/// Exhaustive mode enumerates every R (n <= kExhaustiveAuditCap). Sampled mode
/// combines uniform subsets of each size, greedy densification (repeatedly add
/// the vertex with the most edges into the current set) and the suffixes of a
/// minimum-degree peeling order. k_max is clamped to n.
DensityReport audit_local_density(const Graph& g, const Rational& c2, std::size_t k_max,
                                  const DensityAuditOptions& options = {});

enum class Coloring { kUniform, kBalanced, kAdversarial };

std::string_view coloring_name(Coloring coloring);
/// Accepts uniform, balanced, adversarial and the long forms uniform-random,
/// balanced-greedy, adversarial-plugin.
Coloring parse_coloring(std::string_view name);

/// Per-edge colors in 1..r, indexed by edge id.
///  - uniform: independent uniform colors.
///  - balanced: edges in random order, each to the currently smallest class.
///  - adversarial: edges in random order, each to the color whose class
///    would have the smallest component containing it after the addition.
std::vector<int> color_edges(const Graph& g, int r, Coloring coloring, std::uint64_t seed);

/// Spanning subgraph ([n], E_c) of a color class.
Graph color_class(const Graph& g, const std::vector<int>& colors, int color);

/// Color with the most edges; ties go to the smallest color.
int majority_color(const std::vector<int>& colors, int r);

struct MonochromaticReport {
  int r = 0;
  int color = 0;
  std::size_t graph_edges = 0;
  std::size_t class_edges = 0;
  std::optional<CycleCertificate> certificate;
  std::string failure;  // hypothesis-failure message when no certificate
};

/// Majority color class of an explicit coloring, then extract_cycle_density
/// on it. Hypothesis failures are reported, not thrown.
MonochromaticReport monochromatic_cycle(const Graph& g, const std::vector<int>& colors, int r,
                                        const DensityParams& params);

/// Samples G(n, p), colors it (seed derived from spec.seed) and runs
/// monochromatic_cycle. Requires r >= 1.
MonochromaticReport monochromatic_cycle_experiment(const GnpSpec& spec, int r, Coloring coloring,
                                                   const DensityParams& params);

/// Empirical frequency of "some R spans at least c2 |R| edges" in G(n, c1/n),
/// by exhaustive audit with k_max = n, over `trials` seeds.
struct SparsityTrendPoint {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double frequency() const { return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials); }
};

std::vector<SparsityTrendPoint> local_sparsity_trend(const Rational& c1, const Rational& c2,
                                                     const std::vector<std::size_t>& sizes, std::size_t trials,
                                                     std::uint64_t seed);

}  // namespace locyc
