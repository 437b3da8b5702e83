#include "locyc/harness/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "locyc/criteria.hpp"
#include "locyc/errors.hpp"
#include "locyc/game.hpp"
#include "locyc/graph_io.hpp"
#include "locyc/harness/acceptance.hpp"
#include "locyc/harness/serialize.hpp"
#include "locyc/ramsey.hpp"
#include "locyc/rng.hpp"

namespace locyc::harness {

namespace {

Graph load_graph(const ExperimentConfig& config) { return read_edge_list(config.text("graph")); }

AuditMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return AuditMode::kExhaustive;
  if (text == "sampled") return AuditMode::kSampled;
  throw InputError("audit mode must be exhaustive or sampled, got '" + text + "'");
}

std::vector<Vertex> parse_order(const ExperimentConfig& config, std::size_t n) {
  const std::string spec = config.text("order", "identity");
  if (spec == "identity") return identity_order(n);
  if (spec == "random") return random_order(n, config.u64("seed", 0));
  if (spec.rfind("seed:", 0) == 0) {
    ExperimentConfig tmp;
    tmp.set("order-seed", spec.substr(5));
    return random_order(n, tmp.u64("order-seed"));
  }
  std::ifstream in(spec);
  if (!in) throw InputError("order must be identity, random, seed:N or a readable file, got '" + spec + "'");
  std::vector<Vertex> order;
  long long v = 0;
  while (in >> v) order.push_back(static_cast<Vertex>(v));
  if (!in.eof()) throw InputError("order file " + spec + " holds a non-integer token");
  return order;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Outcome hypothesis(Outcome outcome, const std::string& message) {
  outcome.exit_code = kExitHypothesis;
  outcome.status = "hypothesis-failure";
  outcome.payload["failure"] = message;
  return outcome;
}

Outcome cmd_extract(const ExperimentConfig& config) {
  const Graph g = load_graph(config);
  const std::string mode = config.text("mode", "expander");
  const std::size_t k = config.size("k");
  Outcome outcome;
  outcome.payload["graph"] = graph_ref(g, config.text("graph"));
  outcome.payload["mode"] = mode;
  outcome.payload["k"] = k;
  try {
    CycleCertificate cert;
    if (mode == "expander") {
      const auto order = parse_order(config, g.num_vertices());
      cert = extract_cycle_expander(g, k, order);
    } else if (mode == "density") {
      const DensityParams params{config.rational("c1"), config.rational("c2"), k};
      params.check();
      outcome.payload["params"] = to_json(params);
      cert = extract_cycle_density(g, params);
    } else {
      throw InputError("extract mode must be expander or density, got '" + mode + "'");
    }
    const auto defect = certificate_defect(g, cert);
    outcome.payload["certificate"] = to_json(cert);
    outcome.payload["validated"] = !defect;
    outcome.validation["certificate"] = defect ? *defect : "ok";
    if (config.has("out")) write_text(config.text("out"), to_json(cert).dump(2) + "\n");
    if (defect) return hypothesis(std::move(outcome), "certificate failed validation: " + *defect);
  } catch (const ExpansionViolated& e) {
    outcome.payload["witness"] = e.witness();
    return hypothesis(std::move(outcome), e.what());
  } catch (const HypothesisFailure& e) {
    return hypothesis(std::move(outcome), e.what());
  }
  return outcome;
}

Outcome cmd_audit(const ExperimentConfig& config) {
  const Graph g = load_graph(config);
  const std::string kind = config.text("kind", "density");
  const AuditMode mode = parse_mode(config.text("mode", g.num_vertices() <= kExhaustiveAuditCap ? "exhaustive" : "sampled"));
  Outcome outcome;
  outcome.payload["graph"] = graph_ref(g, config.text("graph"));
  outcome.payload["kind"] = kind;
  if (kind == "density") {
    DensityAuditOptions options;
    options.mode = mode;
    options.k_min = config.size("kmin", 1);
    options.samples = config.size("samples", 64);
    options.greedy_starts = config.size("greedy-starts", 0);
    options.seed = config.u64("seed", 0);
    const auto report = audit_local_density(g, config.rational("c2"), config.size("kmax", g.num_vertices()), options);
    outcome.payload["report"] = to_json(report);
    if (!report.passed) return hypothesis(std::move(outcome), "some examined set spans at least c2 |R| edges");
  } else if (kind == "expansion") {
    const auto audit = audit_expansion(g, config.size("k"), mode, config.size("samples", 64), config.u64("seed", 0));
    outcome.payload["report"] = to_json(audit);
  } else {
    throw InputError("audit kind must be density or expansion, got '" + kind + "'");
  }
  return outcome;
}

Outcome cmd_gnp(const ExperimentConfig& config) {
  const GnpSpec spec{config.size("n"), config.real("p"), config.u64("seed", 0)};
  const Graph g = sample_gnp(spec);
  Outcome outcome;
  outcome.payload["generator"] = Rng::kGeneratorVersion;
  outcome.payload["graph"] = graph_ref(g, config.text("out", ""));
  if (config.has("out")) write_edge_list(std::filesystem::path(config.text("out")), g);
  return outcome;
}

Outcome cmd_dfs(const ExperimentConfig& config) {
  const Graph g = load_graph(config);
  const auto forest = dfs_forest(g, parse_order(config, g.num_vertices()));
  Outcome outcome;
  outcome.payload["graph"] = graph_ref(g, config.text("graph"));
  Json parents = Json::array();
  for (std::size_t v = 0; v < forest.size(); ++v) {
    const Vertex p = forest.parent(static_cast<Vertex>(v));
    if (p != kNoParent) parents.push_back({static_cast<Vertex>(v), p});
  }
  outcome.payload["roots"] = std::vector<Vertex>(forest.roots().begin(), forest.roots().end());
  outcome.payload["parent_pairs"] = parents;
  const bool back_edges = check_back_edge_property(g, forest);
  outcome.payload["back_edge_property"] = back_edges;
  if (!back_edges) return hypothesis(std::move(outcome), "a non-forest edge joins two unrelated vertices");
  return outcome;
}

Outcome cmd_ramsey_lower(const ExperimentConfig& config) {
  const Graph g = load_graph(config);
  const int r = static_cast<int>(config.size("r"));
  std::optional<std::size_t> threshold;
  if (config.has("threshold")) threshold = config.size("threshold");
  const auto coloring = lower_bound_coloring(g, r, config.u64("seed", 0), threshold);
  const AffinePlane plane = build_affine_plane(coloring.q);
  const auto report = verify_lower_bound_coloring(g, plane, coloring, config.size("n-target"));
  const auto structure = coloring_defect(g, plane, coloring);
  const auto confinement = confinement_defect(g, plane, coloring);
  Outcome outcome;
  outcome.payload["graph"] = graph_ref(g, config.text("graph"));
  outcome.payload["r"] = r;
  outcome.payload["q"] = coloring.q;
  outcome.payload["degree_threshold"] = coloring.degree_threshold;
  outcome.payload["report"] = to_json(report);
  outcome.payload["structure_valid"] = !structure;
  outcome.payload["confinement_valid"] = !confinement;
  outcome.validation["structure"] = structure.value_or("ok");
  outcome.validation["confinement"] = confinement.value_or("ok");
  if (structure || confinement) return hypothesis(std::move(outcome), structure ? *structure : *confinement);
  return outcome;
}

Outcome cmd_ramsey_upper(const ExperimentConfig& config) {
  std::vector<Coloring> colorings;
  for (const auto& name : config.text_list("colorings", "uniform,adversarial")) colorings.push_back(parse_coloring(name));
  const auto report = upper_bound_pipeline(config.size("n"), static_cast<int>(config.size("r")), config.rational("C"),
                                           config.u64("seed", 0), colorings);
  Outcome outcome;
  outcome.payload["report"] = to_json(report);
  for (const auto& r : report.results) {
    if (!r.validated) return hypothesis(std::move(outcome), std::string(coloring_name(r.coloring)) + ": " + r.failure);
  }
  return outcome;
}

PipelineOptions pipeline_options(const ExperimentConfig& config, std::size_t n) {
  PipelineOptions options;
  options.k_floor = config.size("k-floor", (n + 99) / 100);
  options.audit_samples = config.size("samples", 16);
  options.audit_greedy_starts = config.size("greedy-starts", 0);
  return options;
}

Outcome pipeline_outcome(const ExperimentConfig& config, const GamePipelineReport& report) {
  Outcome outcome;
  outcome.payload["report"] = to_json(report);
  const auto defect = replay_defect(report.game);
  outcome.validation["replay"] = defect.value_or("ok");
  if (config.has("transcript")) {
    const std::string lines = transcript_lines(report.game);
    write_text(config.text("transcript"), lines);
    outcome.payload["transcript"] = Json{{"path", config.text("transcript")}, {"sha256", sha256_hex(lines)}};
  }
  if (defect) return hypothesis(std::move(outcome), "transcript replay failed: " + *defect);
  if (!report.validated) return hypothesis(std::move(outcome), report.failure.empty() ? "no validated cycle" : report.failure);
  if (!report.audit.passed) return hypothesis(std::move(outcome), "local density audit found a dense set");
  return outcome;
}

Outcome cmd_game_mb(const ExperimentConfig& config) {
  const std::size_t n = config.size("n");
  const std::uint64_t seed = config.u64("seed", 0);
  auto breaker = make_breaker(config.text("breaker", "greedy-degree"), derive_seed(seed, "breaker"));
  const auto report = maker_cycle_pipeline(n, config.real("eps"), *breaker, seed, pipeline_options(config, n));
  return pipeline_outcome(config, report);
}

Outcome cmd_game_cw(const ExperimentConfig& config) {
  const std::size_t n = config.size("n");
  const std::uint64_t seed = config.u64("seed", 0);
  auto waiter = make_waiter(config.text("waiter", "random"), derive_seed(seed, "waiter"));
  auto client = make_client(config.text("client", "greedy-sparse"), derive_seed(seed, "client"));
  const auto report = client_cycle_pipeline(n, config.real("eps"), *waiter, *client, seed, pipeline_options(config, n));
  return pipeline_outcome(config, report);
}

Outcome cmd_game_criterion(const ExperimentConfig& config) {
  const std::string which = config.text("which");
  Outcome outcome;
  outcome.payload["which"] = which;
  if (which == "cw") {
    const auto result = cw_criterion_sum(config.size("b"), config.size_list("family"));
    outcome.payload["sum"] = result.sum;
    outcome.payload["holds"] = result.holds;
    outcome.payload["consequence"] = result.holds ? "Client has a strategy to claim at least floor(C(n,2)/(b+1)) edges "
                                                    "without fully claiming any member of the family"
                                                  : "criterion not met; no conclusion";
    if (!result.holds) return hypothesis(std::move(outcome), "criterion sum is at least 1/2");
  } else if (which == "mb") {
    const std::size_t n = config.size("n");
    const double eps = config.real("eps");
    const double delta = config.real("delta", std::pow(25.0, -4.0 / eps));
    outcome.payload["delta"] = delta;
    outcome.payload["union_bound"] = to_json(mb_union_bound_sum(n, eps, delta));
    outcome.payload["exact_form"] = to_json(mb_exact_form_sum(n, eps, delta));
  } else if (which == "cw-density") {
    const std::size_t n = config.size("n");
    const double eps = config.real("eps");
    const std::size_t b = config.size("b", static_cast<std::size_t>(std::floor((1.0 - eps) * static_cast<double>(n) / 2.0)));
    outcome.payload["b"] = b;
    const auto best = largest_passing_delta(n, b, eps, default_delta_grid());
    outcome.payload["largest_passing_delta"] = best ? Json(*best) : Json(nullptr);
    if (config.has("delta")) {
      const auto result = cw_density_avoidance_sum(n, b, eps, config.real("delta"));
      outcome.payload["delta"] = config.real("delta");
      outcome.payload["sum"] = to_json(result.series);
      outcome.payload["holds"] = result.holds;
      if (!result.holds) return hypothesis(std::move(outcome), "avoidance sum is at least 1/2");
    }
  } else {
    throw InputError("criterion must be cw, mb or cw-density, got '" + which + "'");
  }
  return outcome;
}

Outcome cmd_reproduce(const ExperimentConfig& config) {
  const std::string suite = config.text("suite", "acceptance");
  const auto ids = suite_criteria(suite);
  const std::uint64_t seed = config.u64("seed", 0);
  Outcome outcome;
  if (config.has("only")) {
    const auto id = static_cast<int>(config.size("only"));
    if (std::find(ids.begin(), ids.end(), id) == ids.end() || id == kCriterionCount) {
      throw InputError("criterion " + std::to_string(id) + " cannot run on its own in suite " + suite);
    }
    outcome.payload = run_criterion(id, seed);
    if (outcome.payload.at("verdict") == "FAIL") {
      outcome.exit_code = kExitHypothesis;
      outcome.status = "criterion-failed";
    }
    return outcome;
  }
  const auto summary = run_suite(suite, seed);
  Json lines = Json::array();
  for (const auto& line : summary.lines) {
    lines.push_back(Json{{"id", line.id}, {"name", line.name}, {"verdict", line.verdict}, {"detail", line.detail}});
  }
  outcome.payload["suite"] = suite;
  outcome.payload["criteria"] = lines;
  outcome.payload["passed"] = summary.passed();
  if (!summary.passed()) {
    outcome.exit_code = kExitHypothesis;
    outcome.status = "criterion-failed";
  }
  return outcome;
}

Outcome dispatch(const ExperimentConfig& config) {
  const std::string& command = config.command();
  if (command == "extract") return cmd_extract(config);
  if (command == "audit") return cmd_audit(config);
  if (command == "gnp") return cmd_gnp(config);
  if (command == "dfs") return cmd_dfs(config);
  if (command == "ramsey lower") return cmd_ramsey_lower(config);
  if (command == "ramsey upper") return cmd_ramsey_upper(config);
  if (command == "game mb") return cmd_game_mb(config);
  if (command == "game cw") return cmd_game_cw(config);
  if (command == "game criterion") return cmd_game_criterion(config);
  if (command == "reproduce") return cmd_reproduce(config);
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

Outcome execute(const ExperimentConfig& config) {
  try {
    return dispatch(config);
  } catch (const HypothesisFailure& e) {
    Outcome outcome;
    outcome.payload["command"] = config.command();
    return hypothesis(std::move(outcome), e.what());
  }
}

Json make_record(const ExperimentConfig& config, const Outcome& outcome, double seconds) {
  return Json{{"config", config.to_json()},
              {"generator", Rng::kGeneratorVersion},
              {"timing", {{"seconds", seconds}}},
              {"status", outcome.status},
              {"exit_code", outcome.exit_code},
              {"payload", outcome.payload},
              {"validation", outcome.validation}};
}

bool reproduces(const Json& record) {
  const auto config = ExperimentConfig::from_json(record.at("config"));
  if (record.at("generator") != Rng::kGeneratorVersion) return false;
  return execute(config).payload.dump() == record.at("payload").dump();
}

}  // namespace locyc::harness
