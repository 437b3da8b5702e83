#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace locyc {

/// Exact non-negative-denominator rational used for density thresholds.
/// Flow capacities are scaled by the denominator, so it is capped at
/// kMaxDenominator.
class Rational {
 public:
  static constexpr std::int64_t kMaxDenominator = 1'000'000;

  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  Rational(std::int64_t value) : Rational(value, 1) {}  // NOLINT(google-explicit-constructor)

  /// Accepts "p/q", decimal ("1.25", "-3", "2e-1") or integer text.
  static Rational parse(std::string_view text);
  /// Converts through the shortest round-trip decimal representation of `value`.
  static Rational from_double(double value);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) noexcept;
  friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Compares count * 1 against value * multiplier exactly: returns sign of
/// (count - value * multiplier).
int compare_scaled(std::int64_t count, const Rational& value, std::int64_t multiplier) noexcept;

}  // namespace locyc
