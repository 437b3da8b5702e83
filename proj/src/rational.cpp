#include "locyc/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "locyc/errors.hpp"

namespace locyc {

namespace {

__extension__ using i128 = __int128;

Rational reduce(i128 num, i128 den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (den > Rational::kMaxDenominator) {
    throw ScalingError("rational denominator exceeds " + std::to_string(Rational::kMaxDenominator));
  }
  constexpr i128 kLimit = static_cast<i128>(INT64_MAX);
  if (num > kLimit || num < -kLimit) throw InputError("rational numerator out of range");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den > kMaxDenominator) {
    throw ScalingError("rational denominator exceeds " + std::to_string(kMaxDenominator));
  }
  num_ = num;
  den_ = den;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = parse_int(text.substr(0, slash), text);
    std::int64_t q = parse_int(text.substr(slash + 1), text);
    return reduce(p, q);
  }

  std::string_view mantissa = text;
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    exponent = static_cast<int>(parse_int(exp_text, text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw InputError("not a rational number: '" + std::string(text) + "'");
  // Strip leading zeros so the i128 accumulation only sees significant digits.
  std::size_t first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  if (digits.size() > 30) throw InputError("too many digits in rational: '" + std::string(text) + "'");

  i128 num = 0;
  for (char c : digits) num = num * 10 + (c - '0');
  int scale = exponent - frac_digits;
  if (scale > 18 || scale < -18) throw InputError("rational exponent out of range: '" + std::string(text) + "'");
  i128 den = 1;
  for (int i = 0; i < -scale; ++i) den *= 10;
  for (int i = 0; i < scale; ++i) num *= 10;
  return reduce(negative ? -num : num, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InputError("non-finite rational");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw InputError("cannot format rational");
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("division by zero rational");
  return reduce(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) noexcept {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

int compare_scaled(std::int64_t count, const Rational& value, std::int64_t multiplier) noexcept {
  i128 lhs = static_cast<i128>(count) * value.den();
  i128 rhs = static_cast<i128>(value.num()) * multiplier;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace locyc
