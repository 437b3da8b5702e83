#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace locyc {

/// A nonnegative series evaluated in log space. log_value is -infinity for an
/// empty or all-zero sum; value may overflow to +infinity while log_value
/// stays finite.
struct SeriesValue {
  double value = 0.0;
  double log_value = 0.0;
  std::size_t terms = 0;  // nonzero summands
};

/// sum_{1 <= i <= floor(delta n)} [20 (i/n)^(eps/4)]^i.
SeriesValue mb_union_bound_sum(std::size_t n, double eps, double delta);

/// The estimate before simplification: sum over i of
/// C(n,i) C(C(i,2), e) ((1+eps/2) n)^e (3 / (eps n^2))^e, e = ceil((1+eps/4) i).
/// Summands with C(i,2) < e vanish.
SeriesValue mb_exact_form_sum(std::size_t n, double eps, double delta);

struct CriterionResult {
  double sum = 0.0;
  bool holds = false;  // sum < 1/2: Client can avoid claiming every member fully
};

/// sum over the family of (1/(b+1))^|E(F)|. Throws InputError on a member
/// with no edges.
CriterionResult cw_criterion_sum(std::size_t b, const std::vector<std::size_t>& edge_counts);

struct AvoidanceResult {
  SeriesValue series;
  bool holds = false;  // sum < 1/2
};

/// sum_{1 <= i <= floor(delta n)} C(n,i) C(C(i,2), e) (1/(b+1))^e,
/// e = ceil((1+eps/2) i); summands with C(i,2) < e vanish.
AvoidanceResult cw_density_avoidance_sum(std::size_t n, std::size_t b, double eps, double delta);

/// Log-spaced grid from 1e-6 to 0.5.
std::vector<double> default_delta_grid(std::size_t points = 40);

/// Largest grid value whose avoidance sum is below 1/2.
std::optional<double> largest_passing_delta(std::size_t n, std::size_t b, double eps, const std::vector<double>& grid);

}  // namespace locyc
