#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "locyc/criteria.hpp"
#include "locyc/errors.hpp"
#include "locyc/rng.hpp"

namespace locyc {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

TEST(CwCriterion, Examples) {
  const auto one = cw_criterion_sum(2, {3});
  EXPECT_NEAR(one.sum, 1.0 / 27.0, 1e-15);
  EXPECT_TRUE(one.holds);
  const auto none = cw_criterion_sum(7, {});
  EXPECT_EQ(none.sum, 0.0);
  EXPECT_TRUE(none.holds);
  const auto many = cw_criterion_sum(2, std::vector<std::size_t>(100, 3));
  EXPECT_NEAR(many.sum, 100.0 / 27.0, 1e-12);
  EXPECT_FALSE(many.holds);
  EXPECT_THROW(cw_criterion_sum(2, {0}), InputError);
}

TEST(CwCriterionProperty, MatchesExactArithmetic) {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t b = rng.below(12);
    std::vector<std::size_t> family(rng.below(21));
    for (auto& e : family) e = 1 + rng.below(40);
    cpp_rational exact = 0;
    for (std::size_t e : family) exact += cpp_rational(cpp_int(1), boost::multiprecision::pow(cpp_int(b + 1), static_cast<unsigned>(e)));
    const auto result = cw_criterion_sum(b, family);
    const double expected = exact.convert_to<double>();
    if (expected == 0.0) {
      ASSERT_EQ(result.sum, 0.0);
    } else {
      ASSERT_LE(std::abs(result.sum - expected) / expected, 1e-12);
    }
    ASSERT_EQ(result.holds, exact < cpp_rational(1, 2));
  }
}

TEST(MbSums, EmptyRanges) {
  EXPECT_EQ(mb_union_bound_sum(100, 0.5, 0.005).terms, 0u);
  EXPECT_EQ(mb_union_bound_sum(100, 0.5, 0.005).value, 0.0);
  const double tiny = std::pow(25.0, -20.0);
  for (std::size_t n : {1000u, 1000000u, 1000000000u}) {
    EXPECT_EQ(mb_union_bound_sum(n, 0.2, tiny).value, 0.0);
    EXPECT_EQ(mb_exact_form_sum(n, 0.2, tiny).value, 0.0);
  }
}

TEST(MbSums, UnionBoundMatchesDirectSum) {
  const std::size_t n = 500;
  const double eps = 0.5;
  const double delta = 0.02;
  double direct = 0.0;
  for (std::size_t i = 1; i <= 10; ++i) direct += std::pow(20.0 * std::pow(static_cast<double>(i) / n, eps / 4.0), static_cast<double>(i));
  const auto series = mb_union_bound_sum(n, eps, delta);
  EXPECT_EQ(series.terms, 10u);
  EXPECT_NEAR(series.value / direct, 1.0, 1e-12);
  EXPECT_NEAR(series.log_value, std::log(direct), 1e-9);
}

TEST(MbSums, OutOfRangeEpsilonStaysFinite) {
  const auto at100 = mb_union_bound_sum(100, 4.0, 0.1);
  EXPECT_TRUE(std::isfinite(at100.value));
  EXPECT_GT(at100.terms, 0u);
  // The summand base 20 (i/n) falls with n once 20 delta < 1.
  double previous = INFINITY;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const double v = mb_union_bound_sum(n, 4.0, 0.01).value;
    EXPECT_LT(v, previous);
    previous = v;
  }
}

TEST(MbSums, ExactFormMatchesDirectEvaluation) {
  // Small n, direct long double evaluation of every summand.
  const std::size_t n = 60;
  const double eps = 1.0;
  const double delta = 0.5;
  long double direct = 0.0L;
  auto choose = [](long double a, long double b) {
    return std::exp(std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1));
  };
  for (std::size_t i = 1; i <= 30; ++i) {
    const auto e = static_cast<std::size_t>(std::ceil((1.0 + eps / 4.0) * static_cast<double>(i)));
    const std::size_t pairs = i * (i - 1) / 2;
    if (pairs < e) continue;
    direct += choose(n, i) * choose(pairs, e) *
              std::pow((1.0L + eps / 2.0) * n * 3.0L / (eps * n * n), static_cast<long double>(e));
  }
  const auto series = mb_exact_form_sum(n, eps, delta);
  EXPECT_NEAR(series.value / static_cast<double>(direct), 1.0, 1e-9);
}

TEST(Avoidance, EmptyAndFinite) {
  const auto empty = cw_density_avoidance_sum(100, 10, 0.5, 0.005);
  EXPECT_EQ(empty.series.value, 0.0);
  EXPECT_TRUE(empty.holds);
  const auto big = cw_density_avoidance_sum(10000, 2500, 0.5, 1e-3);
  EXPECT_TRUE(std::isfinite(big.series.log_value));
}

TEST(AvoidanceProperty, NonIncreasingAsDeltaShrinks) {
  for (auto [n, eps] : {std::pair<std::size_t, double>{10000, 0.5}, {2000, 0.5}, {1000, 0.2}, {500, 0.9}}) {
    const auto b = static_cast<std::size_t>(std::floor((1.0 - eps) * static_cast<double>(n) / 2.0));
    const auto grid = default_delta_grid(20);
    ASSERT_EQ(grid.size(), 20u);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      ASSERT_LT(grid[i - 1], grid[i]);
      const auto lo = cw_density_avoidance_sum(n, b, eps, grid[i - 1]);
      const auto hi = cw_density_avoidance_sum(n, b, eps, grid[i]);
      ASSERT_LE(lo.series.terms, hi.series.terms);
      ASSERT_FALSE(hi.series.log_value < lo.series.log_value);
      if (hi.holds) {
        ASSERT_TRUE(lo.holds);
      }
    }
  }
}

TEST(Avoidance, LargestPassingDelta) {
  const auto grid = default_delta_grid();
  const auto delta = largest_passing_delta(2000, 500, 0.5, grid);
  ASSERT_TRUE(delta.has_value());
  EXPECT_TRUE(cw_density_avoidance_sum(2000, 500, 0.5, *delta).holds);
  const auto next = std::upper_bound(grid.begin(), grid.end(), *delta);
  if (next != grid.end()) {
    EXPECT_FALSE(cw_density_avoidance_sum(2000, 500, 0.5, *next).holds);
  }
}

}  // namespace
}  // namespace locyc
