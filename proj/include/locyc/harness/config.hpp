#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "locyc/rational.hpp"

namespace locyc::harness {

using Json = nlohmann::ordered_json;

/// A subcommand plus its parameters as text. Typed getters parse on demand
/// and throw InputError on malformed values.
///
/// File format: one `key = value` per line, `#` starts a comment, and the
/// subcommand is stored under the key `command` (e.g. `command = game mb`).
class ExperimentConfig {
 public:
  ExperimentConfig() = default;
  explicit ExperimentConfig(std::string command) : command_(std::move(command)) {}

  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig read(const std::string& path);
  static ExperimentConfig from_json(const Json& json);

  std::string to_text() const;
  Json to_json() const;

  const std::string& command() const noexcept { return command_; }
  void set_command(std::string command) { command_ = std::move(command); }
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  /// Copies keys absent here from `defaults`.
  void merge_defaults(const ExperimentConfig& defaults);

  std::string text(const std::string& key) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::size_t size(const std::string& key) const;
  std::size_t size(const std::string& key, std::size_t fallback) const;
  std::uint64_t u64(const std::string& key) const;
  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
  double real(const std::string& key) const;
  double real(const std::string& key, double fallback) const;
  Rational rational(const std::string& key) const;
  std::vector<std::size_t> size_list(const std::string& key) const;
  std::vector<std::string> text_list(const std::string& key, const std::string& fallback) const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;

 private:
  std::string command_;
  std::map<std::string, std::string> values_;
};

}  // namespace locyc::harness
