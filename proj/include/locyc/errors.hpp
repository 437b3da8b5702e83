#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace locyc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or out-of-domain parameter. The CLI maps it to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run above its size cap.
class SizeCapError : public InputError {
 public:
  using InputError::InputError;
};

/// Affine plane of an order the builder cannot construct (non-prime q).
class UnsupportedOrder : public InputError {
 public:
  using InputError::InputError;
};

/// A rational parameter needs a denominator above the exact-flow scaling cap.
class ScalingError : public InputError {
 public:
  using InputError::InputError;
};

/// A structural hypothesis on the input graph does not hold. The CLI maps it
/// to exit code 1: the run was well formed, the mathematics did not apply.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// Operation precondition on the graph (e.g. |V| > k, |E| >= c1|V|) failed.
class PreconditionError : public HypothesisFailure {
 public:
  using HypothesisFailure::HypothesisFailure;
};

/// No component exceeds k vertices; carries a set W with k/2 <= |W| <= k and
/// empty external neighborhood.
class ExpansionViolated : public HypothesisFailure {
 public:
  ExpansionViolated(const std::string& what, std::vector<int> witness)
      : HypothesisFailure(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

/// The dense core is too small to split at the requested k.
class DensityInsufficient : public HypothesisFailure {
 public:
  using HypothesisFailure::HypothesisFailure;
};

/// A game strategy produced an illegal move.
class StrategyFault : public Error {
 public:
  StrategyFault(const std::string& actor, std::size_t round, const std::string& detail)
      : Error(actor + " made an illegal move in round " + std::to_string(round) + ": " + detail),
        actor_(actor),
        round_(round) {}

  const std::string& actor() const noexcept { return actor_; }
  std::size_t round() const noexcept { return round_; }

 private:
  std::string actor_;
  std::size_t round_;
};

}  // namespace locyc
