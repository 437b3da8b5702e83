#include "locyc/harness/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "locyc/graph_io.hpp"

namespace locyc::harness {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

Json graph_ref(const Graph& g, const std::string& path) {
  std::ostringstream text;
  write_edge_list(text, g);
  Json out{{"n", g.num_vertices()}, {"m", g.num_edges()}, {"sha256", sha256_hex(text.str())}};
  if (!path.empty()) out["path"] = path;
  return out;
}

Json to_json(const VertexSet& set) { return Json(set.ids()); }

Json to_json(const CycleCertificate& cert) {
  return Json{{"length", cert.length()},
              {"claimed_bound", cert.claimed_bound},
              {"neighborhood_size", cert.neighborhood_size},
              {"k", cert.k},
              {"split_vertex", cert.split_vertex},
              {"v_star", cert.v_star},
              {"closing_edge", {cert.closing_edge.u, cert.closing_edge.v}},
              {"witness_w_size", cert.witness_w.size()},
              {"witness_w", to_json(cert.witness_w)},
              {"witness_path", cert.witness_path},
              {"cycle", cert.cycle}};
}

Json to_json(const ExpansionAudit& audit) {
  return Json{{"mode", audit.mode == AuditMode::kExhaustive ? "exhaustive" : "sampled"},
              {"heuristic", audit.mode == AuditMode::kSampled},
              {"min_size", audit.min_size},
              {"max_size", audit.max_size},
              {"min_neighborhood", audit.min_neighborhood},
              {"witness", to_json(audit.witness)},
              {"examined", audit.examined}};
}

Json to_json(const DensityReport& report) {
  Json out{{"mode", report.mode == AuditMode::kExhaustive ? "exhaustive" : "sampled"},
           {"heuristic", report.heuristic},
           {"c2", report.c2.to_string()},
           {"k_min", report.k_min},
           {"k_max", report.k_max},
           {"worst_size", report.worst_set.size()},
           {"worst_edges", report.worst_edges},
           {"worst_excess", report.worst_excess},
           {"passed", report.passed},
           {"examined", report.examined},
           {"worst_set", to_json(report.worst_set)}};
  out["first_violation_size"] = report.first_violation_size ? Json(*report.first_violation_size) : Json(nullptr);
  return out;
}

Json to_json(const DensityParams& params) {
  return Json{{"c1", params.c1.to_string()},
              {"c2", params.c2.to_string()},
              {"k", params.k},
              {"length_bound", params.length_bound()},
              {"precondition_holds", params.precondition_holds()}};
}

Json to_json(const MonochromaticReport& report) {
  Json out{{"r", report.r}, {"color", report.color}, {"graph_edges", report.graph_edges}, {"class_edges", report.class_edges}};
  out["certificate"] = report.certificate ? to_json(*report.certificate) : Json(nullptr);
  out["failure"] = report.failure;
  return out;
}

Json to_json(const LowerBoundReport& report) {
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t load : report.line_load) ++histogram[load];
  Json hist = Json::array();
  for (const auto& [load, count] : histogram) hist.push_back({load, count});
  return Json{{"n_target", report.n_target},
              {"max_load", report.max_load},
              {"load_sum", report.load_sum},
              {"line_load", report.line_load},
              {"load_histogram", hist},
              {"v0_size", report.v0_size},
              {"loads_below_target", report.loads_below_target},
              {"cover_below_half", report.cover_below_half},
              {"kills_path", report.kills_path},
              {"color_edges", report.color_edges}};
}

Json to_json(const UpperBoundReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json item{{"coloring", coloring_name(r.coloring)},
              {"color", r.color},
              {"class_edges", r.class_edges},
              {"failed_sample", r.failed_sample},
              {"validated", r.validated},
              {"failure", r.failure}};
    item["path_length"] = r.certificate ? Json(r.certificate->length()) : Json(nullptr);
    item["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    results.push_back(item);
  }
  return Json{{"n", report.n},
              {"r", report.r},
              {"C", report.big_c.to_string()},
              {"p", report.p},
              {"delta", report.delta},
              {"k", report.k},
              {"vacuous", report.vacuous},
              {"note", report.vacuous ? "k < 4: bound vacuous at desk scale" : ""},
              {"n0", report.n0},
              {"c1", report.c1.to_string()},
              {"c2", report.c2.to_string()},
              {"graph_edges", report.graph_edges},
              {"results", results}};
}

Json to_json(const SeriesValue& series) {
  Json out{{"terms", series.terms}};
  out["value"] = series.value;
  // JSON has no infinities; the log is null for an empty sum.
  out["log_value"] = std::isfinite(series.log_value) ? Json(series.log_value) : Json(nullptr);
  return out;
}

Json to_json(const GameState& state) {
  std::size_t min_free = 0;
  if (!state.free_at_turn.empty()) min_free = *std::min_element(state.free_at_turn.begin(), state.free_at_turn.end());
  return Json{{"variant", state.variant == Variant::kMakerBreaker ? "maker-breaker" : "client-waiter"},
              {"n", state.n},
              {"bias", state.bias},
              {"rounds", state.rounds},
              {"exhausted", state.exhausted},
              {"protagonist_edges", state.protagonist.size()},
              {"antagonist_edges", state.antagonist.size()},
              {"transcript_entries", state.transcript.size()},
              {"min_free_at_turn", min_free}};
}

Json to_json(const GamePipelineReport& report) {
  Json out{{"n", report.n},
           {"eps", report.eps},
           {"bias", report.bias},
           {"rounds_planned", report.rounds_planned},
           {"game", to_json(report.game)},
           {"graph_edges", report.graph_edges},
           {"params", to_json(report.params)},
           {"theory_delta", report.theory_delta},
           {"theory_k", report.theory_k},
           {"theory_vacuous", report.theory_vacuous},
           {"empirical_k", report.empirical_k},
           {"audit", to_json(report.audit)},
           {"validated", report.validated},
           {"failure", report.failure},
           {"free_floor", report.free_floor},
           {"turns_below_floor", report.turns_below_floor}};
  out["cycle_length"] = report.certificate ? Json(report.certificate->length()) : Json(nullptr);
  out["certificate"] = report.certificate ? to_json(*report.certificate) : Json(nullptr);
  return out;
}

std::string transcript_lines(const GameState& state) {
  std::string out;
  for (const auto& entry : state.transcript) {
    out += Json{{"round", entry.round}, {"actor", actor_name(entry.actor)}, {"u", entry.edge.u}, {"v", entry.edge.v}}.dump();
    out += '\n';
  }
  return out;
}

}  // namespace locyc::harness
