#include "locyc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "locyc/errors.hpp"

namespace locyc {

namespace {

using Real = long double;

Real log_choose(Real n, Real k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

// Log-sum-exp accumulator.
class LogSum {
 public:
  void add(Real log_term) {
    ++terms_;
    if (log_term == -std::numeric_limits<Real>::infinity()) return;
    if (log_term > max_) {
      scaled_ = scaled_ * std::exp(max_ - log_term) + 1;
      max_ = log_term;
    } else {
      scaled_ += std::exp(log_term - max_);
    }
  }

  SeriesValue result() const {
    SeriesValue out;
    out.terms = terms_;
    if (scaled_ == 0) {
      out.log_value = -std::numeric_limits<double>::infinity();
      out.value = 0.0;
      return out;
    }
    const Real log_value = max_ + std::log(scaled_);
    out.log_value = static_cast<double>(log_value);
    out.value = static_cast<double>(std::exp(log_value));
    return out;
  }

 private:
  Real max_ = -std::numeric_limits<Real>::infinity();
  Real scaled_ = 0;
  std::size_t terms_ = 0;
};

std::size_t term_count(std::size_t n, double delta) {
  if (!(delta >= 0.0)) throw InputError("delta must be nonnegative");
  return static_cast<std::size_t>(std::floor(delta * static_cast<double>(n)));
}

void check_eps(double eps) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
}

std::size_t ceil_edges(double factor, std::size_t i) {
  // Guard against factor * i landing a hair above an integer.
  return static_cast<std::size_t>(std::ceil(factor * static_cast<double>(i) - 1e-9));
}

}  // namespace

SeriesValue mb_union_bound_sum(std::size_t n, double eps, double delta) {
  check_eps(eps);
  LogSum sum;
  const std::size_t top = std::min(term_count(n, delta), n);
  for (std::size_t i = 1; i <= top; ++i) {
    const Real x = static_cast<Real>(i) / static_cast<Real>(n);
    sum.add(static_cast<Real>(i) * (std::log(Real{20}) + static_cast<Real>(eps) / 4 * std::log(x)));
  }
  return sum.result();
}

SeriesValue mb_exact_form_sum(std::size_t n, double eps, double delta) {
  check_eps(eps);
  LogSum sum;
  const std::size_t top = std::min(term_count(n, delta), n);
  const Real nn = static_cast<Real>(n);
  const Real log_per_edge = std::log((1 + static_cast<Real>(eps) / 2) * nn) - std::log(static_cast<Real>(eps) * nn * nn / 3);
  for (std::size_t i = 1; i <= top; ++i) {
    const std::size_t e = ceil_edges(1.0 + eps / 4.0, i);
    const Real pairs = static_cast<Real>(i) * static_cast<Real>(i - 1) / 2;
    if (pairs < static_cast<Real>(e)) continue;
    sum.add(log_choose(nn, static_cast<Real>(i)) + log_choose(pairs, static_cast<Real>(e)) + static_cast<Real>(e) * log_per_edge);
  }
  return sum.result();
}

CriterionResult cw_criterion_sum(std::size_t b, const std::vector<std::size_t>& edge_counts) {
  Real sum = 0;
  const Real base = Real{1} / (static_cast<Real>(b) + 1);
  for (std::size_t e : edge_counts) {
    if (e == 0) throw InputError("family members must have at least one edge");
    sum += std::pow(base, static_cast<Real>(e));
  }
  return {static_cast<double>(sum), sum < Real{0.5}};
}

AvoidanceResult cw_density_avoidance_sum(std::size_t n, std::size_t b, double eps, double delta) {
  check_eps(eps);
  LogSum sum;
  const std::size_t top = std::min(term_count(n, delta), n);
  const Real nn = static_cast<Real>(n);
  const Real log_offer = std::log(static_cast<Real>(b) + 1);
  for (std::size_t i = 1; i <= top; ++i) {
    const std::size_t e = ceil_edges(1.0 + eps / 2.0, i);
    const Real pairs = static_cast<Real>(i) * static_cast<Real>(i - 1) / 2;
    if (pairs < static_cast<Real>(e)) continue;
    sum.add(log_choose(nn, static_cast<Real>(i)) + log_choose(pairs, static_cast<Real>(e)) - static_cast<Real>(e) * log_offer);
  }
  AvoidanceResult out;
  out.series = sum.result();
  out.holds = out.series.log_value < std::log(0.5);
  return out;
}

std::vector<double> default_delta_grid(std::size_t points) {
  std::vector<double> grid;
  if (points == 0) return grid;
  const double lo = std::log(1e-6);
  const double hi = std::log(0.5);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(std::exp(lo + t * (hi - lo)));
  }
  return grid;
}

std::optional<double> largest_passing_delta(std::size_t n, std::size_t b, double eps, const std::vector<double>& grid) {
  std::optional<double> best;
  for (double delta : grid) {
    if (cw_density_avoidance_sum(n, b, eps, delta).holds && (!best || delta > *best)) best = delta;
  }
  return best;
}

}  // namespace locyc
