#include "locyc/harness/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "locyc/errors.hpp"
#include "locyc/harness/commands.hpp"

namespace locyc::harness {

namespace {

struct Key {
  const char* name;
  const char* help;
};

// Every option maps one-to-one onto a config key of the same name.
const std::map<std::string, std::vector<Key>>& command_keys() {
  static const std::map<std::string, std::vector<Key>> keys = {
      {"extract",
       {{"mode", "expander | density"},
        {"k", "split size"},
        {"c1", "density lower bound (rational)"},
        {"c2", "local sparsity bound (rational)"},
        {"graph", "edge-list file"},
        {"out", "certificate JSON path"},
        {"order", "identity | random | seed:N | <file>"},
        {"seed", "seed for --order random"}}},
      {"audit",
       {{"graph", "edge-list file"},
        {"kind", "density | expansion"},
        {"c2", "local sparsity bound (rational)"},
        {"kmin", "smallest subset size audited"},
        {"kmax", "largest subset size audited"},
        {"k", "expansion audit size"},
        {"mode", "exhaustive | sampled"},
        {"samples", "samples per size (sampled mode)"},
        {"greedy-starts", "greedy densification starts, 0 = every vertex"},
        {"seed", "sampling seed"}}},
      {"gnp", {{"n", "vertices"}, {"p", "edge probability"}, {"seed", "sampling seed"}, {"out", "edge-list path"}}},
      {"dfs", {{"graph", "edge-list file"}, {"order", "identity | random | seed:N | <file>"}, {"seed", "seed for --order random"}}},
      {"ramsey lower",
       {{"graph", "edge-list file"},
        {"r", "number of colors"},
        {"n-target", "path length to kill"},
        {"threshold", "degree threshold for V0"},
        {"seed", "partition seed"}}},
      {"ramsey upper",
       {{"n", "vertices"},
        {"r", "number of colors"},
        {"C", "edge density constant (rational)"},
        {"seed", "sampling seed"},
        {"colorings", "comma list of uniform, balanced, adversarial"}}},
      {"game mb",
       {{"n", "vertices"},
        {"eps", "bias parameter"},
        {"breaker", "greedy-degree | random | passive | first"},
        {"seed", "seed"},
        {"k-floor", "smallest split size used"},
        {"samples", "audit samples per size"},
        {"greedy-starts", "audit greedy starts"},
        {"transcript", "JSON-lines transcript path"}}},
      {"game cw",
       {{"n", "vertices"},
        {"eps", "bias parameter"},
        {"waiter", "random | greedy-degree | all | single"},
        {"client", "greedy-sparse | random | first"},
        {"seed", "seed"},
        {"k-floor", "smallest split size used"},
        {"samples", "audit samples per size"},
        {"greedy-starts", "audit greedy starts"},
        {"transcript", "JSON-lines transcript path"}}},
      {"game criterion",
       {{"which", "cw | mb | cw-density"},
        {"b", "bias"},
        {"family", "comma list of member edge counts (cw)"},
        {"n", "vertices"},
        {"eps", "bias parameter"},
        {"delta", "split fraction"}}},
      {"reproduce",
       {{"suite", "acceptance | smoke"}, {"only", "single criterion id"}, {"seed", "base seed"}, {"record", "JSON-lines file to re-execute"}}},
  };
  return keys;
}

void add_keys(CLI::App* sub, const std::string& command, std::map<std::string, std::string>& values) {
  for (const Key& key : command_keys().at(command)) {
    const std::string name = key.name;
    sub->add_option_function<std::string>("--" + name, [&values, name](const std::string& v) { values[name] = v; }, key.help);
  }
}

int reproduce_records(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::string line;
  std::size_t total = 0;
  std::size_t identical = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++total;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ":" + std::to_string(total) + ": " + e.what());
    }
    const bool same = reproduces(record);
    if (same) ++identical;
    out << Json{{"record", total}, {"command", record.at("config").at("command")}, {"identical", same}}.dump() << "\n";
  }
  out << Json{{"records", total}, {"identical", identical}}.dump() << "\n";
  return identical == total ? kExitSuccess : kExitHypothesis;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long cycles from local sparsity: extraction, audits, Ramsey colorings and graph games", "locyc"};
  app.require_subcommand(0, 1);
  std::string config_path;
  std::string records_path;
  app.add_option("--config", config_path, "key = value config file; flags override its values");
  app.add_option("--records", records_path, "append the JSON-lines record here");

  std::map<std::string, std::string> values;
  std::map<CLI::App*, std::string> commands;
  for (const char* name : {"extract", "audit", "gnp", "dfs", "reproduce"}) {
    auto* sub = app.add_subcommand(name);
    add_keys(sub, name, values);
    commands[sub] = name;
  }
  auto* ramsey = app.add_subcommand("ramsey", "Ramsey colorings");
  ramsey->require_subcommand(1);
  for (const char* name : {"lower", "upper"}) {
    auto* sub = ramsey->add_subcommand(name);
    add_keys(sub, std::string("ramsey ") + name, values);
    commands[sub] = std::string("ramsey ") + name;
  }
  auto* game = app.add_subcommand("game", "graph games");
  game->require_subcommand(1);
  for (const char* name : {"mb", "cw", "criterion"}) {
    auto* sub = game->add_subcommand(name);
    add_keys(sub, std::string("game ") + name, values);
    commands[sub] = std::string("game ") + name;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "locyc: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    ExperimentConfig config;
    if (!config_path.empty()) config = ExperimentConfig::read(config_path);
    for (const auto& [sub, name] : commands) {
      if (sub->parsed()) config.set_command(name);
    }
    if (config.command().empty()) {
      err << "locyc: no subcommand given\n\n" << app.help();
      return kExitInput;
    }
    for (const auto& [key, value] : values) config.set(key, value);
    if (!config.has("seed")) {
      if (const char* env = std::getenv("LOCYC_SEED"); env != nullptr && *env != '\0') config.set("seed", env);
    }

    if (config.command() == "reproduce" && config.has("record")) return reproduce_records(config.text("record"), out);

    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = execute(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string line = make_record(config, outcome, seconds).dump();
    out << line << "\n";
    if (!records_path.empty()) {
      // One write per record so concurrent appenders never interleave lines.
      std::ofstream records(records_path, std::ios::app | std::ios::binary);
      if (!records) throw InputError("cannot append to " + records_path);
      records.write((line + "\n").data(), static_cast<std::streamsize>(line.size() + 1));
    }
    if (outcome.status == "hypothesis-failure") err << "locyc: " << outcome.payload.value("failure", std::string()) << "\n";
    return outcome.exit_code;
  } catch (const InputError& e) {
    err << "locyc: " << e.what() << "\n";
    return kExitInput;
  } catch (const StrategyFault& e) {
    err << "locyc: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace locyc::harness
