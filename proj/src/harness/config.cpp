#include "locyc/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "locyc/errors.hpp"

namespace locyc::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw InputError("parameter '" + key + "' has malformed value '" + value + "'");
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw InputError("config line " + std::to_string(line_no) + ": empty key");
    if (key == "command") {
      config.command_ = value;
    } else {
      config.values_[key] = value;
    }
  }
  return config;
}

ExperimentConfig ExperimentConfig::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

ExperimentConfig ExperimentConfig::from_json(const Json& json) {
  if (!json.is_object() || !json.contains("command")) throw InputError("config record needs a command");
  ExperimentConfig config(json.at("command").get<std::string>());
  if (json.contains("params")) {
    for (const auto& [key, value] : json.at("params").items()) config.values_[key] = value.get<std::string>();
  }
  return config;
}

std::string ExperimentConfig::to_text() const {
  std::string out = "command = " + command_ + "\n";
  for (const auto& [key, value] : values_) out += key + " = " + value + "\n";
  return out;
}

Json ExperimentConfig::to_json() const {
  Json params = Json::object();
  for (const auto& [key, value] : values_) params[key] = value;
  return Json{{"command", command_}, {"params", params}};
}

void ExperimentConfig::merge_defaults(const ExperimentConfig& defaults) {
  if (command_.empty()) command_ = defaults.command_;
  for (const auto& [key, value] : defaults.values_) values_.emplace(key, value);
}

std::string ExperimentConfig::text(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InputError("missing required parameter '" + key + "'");
  return it->second;
}

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::size_t ExperimentConfig::size(const std::string& key) const { return parse_number<std::size_t>(key, text(key)); }

std::size_t ExperimentConfig::size(const std::string& key, std::size_t fallback) const {
  return has(key) ? size(key) : fallback;
}

std::uint64_t ExperimentConfig::u64(const std::string& key) const { return parse_number<std::uint64_t>(key, text(key)); }

std::uint64_t ExperimentConfig::u64(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? u64(key) : fallback;
}

double ExperimentConfig::real(const std::string& key) const {
  const std::string value = text(key);
  if (value.find('/') != std::string::npos) return rational(key).to_double();
  return parse_number<double>(key, value);
}

double ExperimentConfig::real(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

Rational ExperimentConfig::rational(const std::string& key) const {
  try {
    return Rational::parse(text(key));
  } catch (const InputError& e) {
    throw InputError("parameter '" + key + "': " + e.what());
  }
}

std::vector<std::size_t> ExperimentConfig::size_list(const std::string& key) const {
  std::vector<std::size_t> out;
  for (const auto& item : text_list(key, "")) out.push_back(parse_number<std::size_t>(key, item));
  return out;
}

std::vector<std::string> ExperimentConfig::text_list(const std::string& key, const std::string& fallback) const {
  const std::string value = text(key, fallback);
  std::vector<std::string> out;
  std::string_view rest = value;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return out;
}

}  // namespace locyc::harness
