#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace locyc {

/// Seeded generator with a documented, platform-independent output stream.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Integer draws use Lemire's multiply-and-reject method and real
/// draws take the top 53 bits, so results do not depend on the standard
/// library's distribution implementations. Any change to these derivations
/// must bump kGeneratorVersion.
class Rng {
 public:
  static constexpr std::string_view kGeneratorVersion = "mt19937_64+lemire53/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Fisher-Yates shuffle driven by below().
  template <typename It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      std::uint64_t j = below(i);
      using std::swap;
      swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent child seed from a parent seed and a stream tag
/// (splitmix64 finalizer over seed ^ hash(tag)).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace locyc
