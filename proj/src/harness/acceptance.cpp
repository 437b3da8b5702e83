#include "locyc/harness/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "locyc/criteria.hpp"
#include "locyc/cycles.hpp"
#include "locyc/dfs.hpp"
#include "locyc/errors.hpp"
#include "locyc/game.hpp"
#include "locyc/harness/commands.hpp"
#include "locyc/harness/serialize.hpp"
#include "locyc/ramsey.hpp"
#include "locyc/random_graphs.hpp"
#include "locyc/rng.hpp"

namespace locyc::harness {

namespace {

Json verdict(int id, bool pass, const std::string& detail, Json metrics, bool warn_only = false) {
  return Json{{"id", id},
              {"name", criterion_name(id)},
              {"verdict", pass ? "PASS" : (warn_only ? "WARN" : "FAIL")},
              {"detail", detail},
              {"metrics", std::move(metrics)}};
}

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

std::uint64_t stream_seed(std::uint64_t seed, int id, std::uint64_t index) {
  return derive_seed(derive_seed(seed, "criterion-" + std::to_string(id)), index);
}

double pick(Rng& rng, std::initializer_list<double> values) {
  return *(values.begin() + static_cast<std::ptrdiff_t>(rng.below(values.size())));
}

Graph drop_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) > 0) keep.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, VertexSet::from_sorted(std::move(keep))).graph;
}

// 1. Back-edge property over random graphs and orders.
Json criterion_back_edges(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 1, 0));
  std::size_t holds = 0;
  std::size_t trees_match = 0;
  const std::size_t trials = 1000;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = 1 + rng.below(50);
    const double p = pick(rng, {0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.8});
    const Graph g = sample_gnp({n, p, stream_seed(seed, 1, 2 * i + 1)});
    const auto forest = dfs_forest(g, random_order(n, stream_seed(seed, 1, 2 * i + 2)));
    if (check_back_edge_property(g, forest)) ++holds;
    const auto comps = connected_components(g);
    bool match = comps.size() == forest.roots().size();
    for (const auto& comp : comps) {
      for (Vertex v : comp) match = match && forest.root_of(v) == forest.root_of(comp[0]);
    }
    if (match) ++trees_match;
  }
  const bool pass = holds == trials && trees_match == trials;
  return verdict(1, pass, format("back-edge property %zu/%zu, trees = components %zu/%zu", holds, trials, trees_match, trials),
                 Json{{"trials", trials}, {"holds", holds}, {"trees_match_components", trees_match}});
}

// 2. Subtree splitting on random rooted trees.
Json criterion_splitting(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 2, 0));
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;
  for (std::size_t t = 0; t < 500; ++t) {
    const std::size_t n = 10 + rng.below(191);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    std::vector<Vertex> parent(n, kNoParent);
    for (std::size_t i = 1; i < n; ++i) parent[static_cast<std::size_t>(perm[i])] = perm[rng.below(i)];
    const auto forest = DfsForest::from_parents(random_order(n, stream_seed(seed, 2, t + 1)), parent);

    // Subtree sizes recomputed from the parent relation alone.
    std::vector<std::size_t> size(n, 1);
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      const auto v = static_cast<std::size_t>(perm[i]);
      depth[v] = depth[static_cast<std::size_t>(parent[v])] + 1;
    }
    std::vector<Vertex> by_depth(perm);
    std::sort(by_depth.begin(), by_depth.end(),
              [&](Vertex a, Vertex b) { return depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]; });
    for (Vertex v : by_depth) {
      if (parent[static_cast<std::size_t>(v)] != kNoParent) size[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] += size[static_cast<std::size_t>(v)];
    }

    for (std::size_t k : {5, 10, 50}) {
      if (n <= k) continue;
      ++cases;
      const auto split = split_under_vertex(forest, perm[0], k);
      std::string problem;
      const auto v = static_cast<std::size_t>(split.v);
      std::size_t total = 0;
      for (Vertex x : split.children) {
        if (parent[static_cast<std::size_t>(x)] != split.v) problem = "X holds a non-child";
        total += size[static_cast<std::size_t>(x)];
      }
      std::vector<Vertex> sorted(split.children);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) problem = "X repeats a child";
      if (size[v] <= k) problem = "split vertex subtree not above k";
      if (total != split.total) problem = "stored total differs from recomputed sizes";
      if (total < k / 2 || total > k) problem = "total outside [floor(k/2), k]";
      for (std::size_t u = 0; u < n; ++u) {
        if (parent[u] == split.v && size[u] > k) problem = "a child of the split vertex exceeds k";
      }
      if (!problem.empty()) {
        ++violations;
        if (first_violation.empty()) first_violation = problem;
      }
    }
  }
  return verdict(2, violations == 0, format("%zu split cases, %zu violations", cases, violations),
                 Json{{"cases", cases}, {"violations", violations}, {"first_violation", first_violation}});
}

// Random small graphs drawn from a few families, for corpus criteria.
Graph corpus_graph(Rng& rng, std::size_t n, std::uint64_t seed) {
  switch (rng.below(4)) {
    case 0:
      return sample_gnp({n, pick(rng, {0.2, 0.3, 0.45, 0.6, 0.8}), seed});
    case 1: {
      // Cycle plus random chords.
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge::of(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
      const std::size_t chords = rng.below(2 * n);
      for (std::size_t c = 0; c < chords; ++c) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (a != b) edges.push_back(Edge::of(a, b));
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      return Graph::from_edges(n, std::move(edges));
    }
    case 2: {
      const std::size_t a = 1 + rng.below(n - 1);
      return graphs::complete_bipartite(a, n - a);
    }
    default: {
      const std::size_t a = 3 + rng.below(n - 5);
      return graphs::disjoint_union(sample_gnp({a, 0.7, seed}), sample_gnp({n - a, 0.7, seed + 1}));
    }
  }
}

// 3. Expander extraction soundness on a corpus with exhaustive expansion audits.
Json criterion_expander(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 3, 0));
  const std::size_t target = 300;
  std::size_t qualifying = 0;
  std::size_t attempts = 0;
  std::size_t violations = 0;
  std::size_t below_circumference = 0;
  std::string first_violation;
  while (qualifying < target && attempts < 20000) {
    ++attempts;
    const std::size_t n = 6 + rng.below(13);
    const Graph g = corpus_graph(rng, n, stream_seed(seed, 3, attempts));
    const std::size_t k = 1 + rng.below(n - 1);
    const auto audit = audit_expansion(g, k, AuditMode::kExhaustive);
    const std::size_t t = audit.min_neighborhood;
    if (t < 2) continue;
    ++qualifying;
    std::string problem;
    try {
      const auto cert = extract_cycle_expander(g, k);
      if (auto defect = certificate_defect(g, cert)) problem = "invalid certificate: " + *defect;
      else if (cert.length() < t + 1) problem = "length below t + 1";
      const std::size_t circumference = longest_cycle_bruteforce(g);
      if (cert.length() > circumference) problem = "length above the circumference";
      else if (cert.length() < circumference) ++below_circumference;
    } catch (const HypothesisFailure& e) {
      problem = std::string("extraction failed: ") + e.what();
    }
    if (!problem.empty()) {
      ++violations;
      if (first_violation.empty()) first_violation = format("n=%zu k=%zu t=%zu: ", n, k, t) + problem;
    }
  }
  const bool pass = qualifying == target && violations == 0;
  return verdict(3, pass, format("%zu/%zu qualifying instances (%zu drawn), %zu violations", qualifying, target, attempts, violations),
                 Json{{"qualifying", qualifying},
                      {"attempts", attempts},
                      {"violations", violations},
                      {"strictly_shorter_than_circumference", below_circumference},
                      {"first_violation", first_violation}});
}

// 4. Complete bipartite tightness family.
Json criterion_tightness(std::uint64_t) {
  Json rows = Json::array();
  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t k : {4, 6, 8, 10}) {
    for (auto [num, den] : {std::pair<std::size_t, std::size_t>{1, 4}, {1, 2}, {3, 4}}) {
      const std::size_t a = (k * num + den - 1) / den;
      const Graph g = graphs::complete_bipartite(k, a);
      const std::size_t circumference = longest_cycle_bruteforce(g);
      const std::size_t t = audit_expansion(g, k, AuditMode::kExhaustive).min_neighborhood;
      Json row{{"k", k}, {"alpha", std::to_string(num) + "/" + std::to_string(den)}, {"ceil_alpha_k", a},
               {"circumference", circumference}, {"expected", 2 * a}, {"t", t}};
      bool ok = circumference == 2 * a;
      try {
        const auto cert = extract_cycle_expander(g, k);
        const bool valid = validate_certificate(g, cert);
        row["cycle_length"] = cert.length();
        row["validated"] = valid;
        if (t >= 2) ok = ok && valid && cert.length() >= t + 1;
      } catch (const HypothesisFailure& e) {
        row["cycle_length"] = nullptr;
        row["extraction"] = e.what();
        if (t >= 2) ok = false;
      }
      row["guarantee"] = t >= 2 ? "length >= t + 1" : "vacuous (t < 2)";
      row["ok"] = ok;
      if (!ok) {
        ++failures;
        if (first_failure.empty()) {
          first_failure = format("K_{%zu,%zu}: circumference %zu, expected %zu", k, a, circumference, 2 * a);
        }
      }
      rows.push_back(row);
    }
  }
  const std::string detail = failures == 0 ? "12/12 instances match" : format("%zu/12 instances fail; first: ", failures) + first_failure;
  return verdict(4, failures == 0, detail, Json{{"instances", rows}, {"failures", failures}});
}

// Largest c2 (on a 1e-6 grid) meeting the length-bound precondition for (c1, k).
std::optional<Rational> precondition_c2(const Rational& c1, std::size_t k) {
  if (k < 5) return std::nullopt;
  const double half = static_cast<double>(k) / 2.0 - 1.0;
  const double ratio = std::pow(1.0 + 2.0 / half, 2.0);
  const double bound = c1.to_double() / ratio;
  auto micro = static_cast<std::int64_t>(std::floor(bound * 1e6));
  for (; micro > 1'000'000; --micro) {
    const Rational c2(micro, 1'000'000);
    if (DensityParams{c1, c2, k}.precondition_holds()) return c2;
  }
  return std::nullopt;
}

// 5. Density extraction soundness on instances with n <= 20 passing an exhaustive audit.
Json criterion_density(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 5, 0));
  const std::size_t target = 200;
  const std::size_t candidates = 2000;
  std::size_t precondition_reachable = 0;
  std::size_t qualifying = 0;
  std::size_t violations = 0;
  std::size_t drawn = 0;
  for (; drawn < candidates && qualifying < target; ++drawn) {
    const std::size_t n = 8 + rng.below(13);
    const Graph g = rng.below(4) == 0 ? graphs::complete(n)
                                      : sample_gnp({n, pick(rng, {0.4, 0.6, 0.8, 0.9, 0.95}), stream_seed(seed, 5, drawn + 1)});
    if (g.num_edges() <= n) continue;
    const std::size_t k = 5 + rng.below(n - 5);
    const Rational c1(static_cast<std::int64_t>(g.num_edges()), static_cast<std::int64_t>(n));
    const auto c2 = precondition_c2(c1, k);
    if (!c2) continue;
    ++precondition_reachable;
    if (!audit_local_density(g, *c2, k).passed) continue;
    ++qualifying;
    const DensityParams params{c1, *c2, k};
    try {
      const auto cert = extract_cycle_density(g, params);
      if (!validate_certificate(g, cert) || static_cast<double>(cert.length()) < params.length_bound()) ++violations;
    } catch (const HypothesisFailure&) {
      ++violations;
    }
  }

  // Larger instances where the hypotheses can hold together.
  Json supplementary = Json::array();
  for (auto [n, c2_text, k] : {std::tuple<std::size_t, const char*, std::size_t>{21, "301/100", 7}, {22, "31/10", 7}}) {
    const Graph g = graphs::complete(n);
    const DensityParams params{Rational(static_cast<std::int64_t>(g.num_edges()), static_cast<std::int64_t>(n)),
                               Rational::parse(c2_text), k};
    const auto audit = audit_local_density(g, params.c2, k);
    Json row{{"graph", "K_" + std::to_string(n)}, {"params", to_json(params)}, {"audit_passed", audit.passed}};
    const auto cert = extract_cycle_density(g, params);
    row["cycle_length"] = cert.length();
    row["validated"] = validate_certificate(g, cert);
    supplementary.push_back(row);
  }

  const bool pass = qualifying >= target && violations == 0;
  return verdict(5, pass,
                 format("%zu/%zu qualifying instances with n <= 20 among %zu candidates (%zu reach the precondition), %zu violations",
                        qualifying, target, drawn, precondition_reachable, violations),
                 Json{{"candidates", drawn},
                      {"precondition_reachable", precondition_reachable},
                      {"qualifying", qualifying},
                      {"violations", violations},
                      {"supplementary_n_21_22", supplementary}});
}

// 6. Max-flow violating-set test against subset enumeration.
Json criterion_flow(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 6, 0));
  const Rational values[] = {Rational(6, 5), Rational(3, 2), Rational(2)};
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  std::size_t invalid_witness = 0;
  std::size_t violating = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 2 + rng.below(15);
    const Graph g = sample_gnp({n, pick(rng, {0.1, 0.2, 0.3, 0.5, 0.7, 0.9}), stream_seed(seed, 6, i + 1)});
    const auto adj = adjacency_masks(g);
    std::vector<std::uint8_t> edges(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < edges.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::uint32_t rest = mask & (mask - 1);
      edges[mask] = static_cast<std::uint8_t>(edges[rest] + std::popcount(adj[low] & rest));
    }
    const std::uint32_t full = static_cast<std::uint32_t>(edges.size() - 1);
    for (const Rational& c1 : values) {
      ++checks;
      bool exists = false;
      for (std::uint32_t w = 1; w <= full && !exists; ++w) {
        const auto incident = static_cast<std::int64_t>(g.num_edges() - edges[full & ~w]);
        exists = compare_scaled(incident, c1, std::popcount(w)) < 0;
      }
      const auto found = find_violating_set(g, c1);
      if (exists) ++violating;
      if (exists != found.has_value()) ++disagreements;
      if (found && (found->empty() ||
                    compare_scaled(static_cast<std::int64_t>(incident_edge_count(g, *found)), c1,
                                   static_cast<std::int64_t>(found->size())) >= 0)) {
        ++invalid_witness;
      }
    }
  }
  const bool pass = disagreements == 0 && invalid_witness == 0;
  return verdict(6, pass, format("%zu checks, %zu disagreements, %zu invalid witnesses", checks, disagreements, invalid_witness),
                 Json{{"checks", checks}, {"violating_instances", violating}, {"disagreements", disagreements},
                      {"invalid_witnesses", invalid_witness}});
}

// 7. Dense-subset proposition over all k1 for which the strict form can hold.
Json criterion_dense_subset(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 7, 0));
  std::size_t graphs_checked = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t draws = 0;
  while (graphs_checked < 300) {
    ++draws;
    const std::size_t n = 3 + rng.below(12);
    const Graph g = sample_gnp({n, pick(rng, {0.1, 0.25, 0.4, 0.6, 0.85}), stream_seed(seed, 7, draws)});
    if (g.num_edges() == 0) continue;
    ++graphs_checked;
    for (std::size_t k1 = 2; k1 < n; ++k1) {
      ++checks;
      if (!dense_subset_oracle(g, k1).confirmed) ++violations;
    }
  }
  return verdict(7, violations == 0, format("%zu graphs, %zu (graph, k1) checks with 2 <= k1 < n, %zu violations", graphs_checked, checks, violations),
                 Json{{"graphs", graphs_checked}, {"draws", draws}, {"checks", checks}, {"violations", violations}});
}

// 8. Affine plane axioms.
Json criterion_planes(std::uint64_t) {
  Json rows = Json::array();
  bool pass = true;
  for (std::size_t q : {2, 3, 5, 7, 11, 13}) {
    const AffinePlane plane = build_affine_plane(q);
    const auto defect = affine_plane_defect(plane);
    const bool counts = plane.num_points() == q * q && plane.num_lines() == q * q + q && plane.num_classes() == q + 1;
    pass = pass && !defect && counts;
    rows.push_back(Json{{"q", q}, {"points", plane.num_points()}, {"lines", plane.num_lines()},
                        {"classes", plane.num_classes()}, {"defect", defect.value_or("none")}});
  }
  return verdict(8, pass, pass ? "axioms and counts hold for q in {2,3,5,7,11,13}" : "an axiom or count failed",
                 Json{{"planes", rows}});
}

// 9. Lower-bound coloring structure.
Json criterion_ramsey_structure(std::uint64_t seed) {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::string first_violation;
  Json per_r = Json::array();
  for (int r : {4, 5}) {
    const std::size_t n = 2000;
    const std::size_t max_edges = static_cast<std::size_t>((r - 2) * (r - 2)) * 50;
    const double p = 0.8 * static_cast<double>(max_edges) / (static_cast<double>(n) * (n - 1) / 2.0);
    std::size_t edges_total = 0;
    for (std::size_t s = 0; s < 50; ++s) {
      Graph g;
      for (std::uint64_t attempt = 0;; ++attempt) {
        g = sample_gnp({n, p, stream_seed(seed, 9, static_cast<std::uint64_t>(r) * 1000000 + s * 1000 + attempt)});
        if (g.num_edges() <= max_edges) break;
      }
      g = drop_isolated(g);
      edges_total += g.num_edges();
      const auto coloring = lower_bound_coloring(g, r, stream_seed(seed, 9, static_cast<std::uint64_t>(r) * 100 + s));
      const AffinePlane plane = build_affine_plane(coloring.q);
      ++runs;
      std::optional<std::string> problem = coloring_defect(g, plane, coloring);
      if (!problem) problem = confinement_defect(g, plane, coloring);
      for (std::size_t e = 0; e < g.num_edges() && !problem; ++e) {
        const bool v0 = coloring.part[static_cast<std::size_t>(g.edge(e).u)] == 0 || coloring.part[static_cast<std::size_t>(g.edge(e).v)] == 0;
        if (v0 && coloring.colors[e] != r) problem = "V0 edge without color r";
      }
      if (problem) {
        ++violations;
        if (first_violation.empty()) first_violation = *problem;
      }
    }
    per_r.push_back(Json{{"r", r}, {"runs", 50}, {"mean_edges", static_cast<double>(edges_total) / 50.0}});
  }
  return verdict(9, violations == 0, format("%zu colorings, %zu violations", runs, violations),
                 Json{{"runs", runs}, {"violations", violations}, {"first_violation", first_violation}, {"per_r", per_r}});
}

// 10. Concentration of the heaviest line load (reported).
Json criterion_concentration(std::uint64_t seed) {
  const int r = 5;
  const std::size_t n = 2000;
  const double p = 1e4 / (static_cast<double>(n) * (n - 1) / 2.0);
  double sum_max = 0.0;
  double sum_expected = 0.0;
  for (std::size_t s = 0; s < 50; ++s) {
    const Graph g = drop_isolated(sample_gnp({n, p, stream_seed(seed, 10, 2 * s)}));
    const auto coloring = lower_bound_coloring(g, r, stream_seed(seed, 10, 2 * s + 1));
    const AffinePlane plane = build_affine_plane(coloring.q);
    const auto report = verify_lower_bound_coloring(g, plane, coloring, n);
    sum_max += static_cast<double>(report.max_load);
    sum_expected += static_cast<double>(g.num_edges()) / static_cast<double>((r - 2) * (r - 2));
  }
  const double mean_max = sum_max / 50.0;
  const double mean_expected = sum_expected / 50.0;
  const double relative = (mean_max - mean_expected) / mean_expected;
  const bool within = std::abs(relative) <= 0.10;
  return verdict(10, within, format("mean max A_L %.1f vs |E|/(r-2)^2 %.1f (%+.2f%%, tolerance 10%%)", mean_max, mean_expected, 100.0 * relative),
                 Json{{"mean_max_load", mean_max}, {"mean_edges_over_q2", mean_expected}, {"relative_difference", relative}},
                 /*warn_only=*/true);
}

// 11. Game legality and the Client counting bound.
Json criterion_games(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 11, 0));
  std::size_t mb_ok = 0;
  std::size_t cw_ok = 0;
  std::size_t bound_checks = 0;
  std::size_t bound_ok = 0;
  std::string first_problem;
  const char* makers[] = {"random", "greedy", "first"};
  const char* breakers[] = {"random", "greedy-degree", "passive", "first"};
  const char* waiters[] = {"random", "greedy-degree", "all", "single"};
  const char* clients[] = {"greedy-sparse", "random", "first"};
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 4 + rng.below(197);
    const std::size_t edges = n * (n - 1) / 2;
    const std::size_t b = rng.below(8) == 0 ? edges + rng.below(3) : 1 + rng.below(std::max<std::size_t>(1, n / 2));
    const std::string maker_name = makers[rng.below(3)];
    const std::size_t rounds = 1 + rng.below(maker_name == "greedy" ? std::min<std::size_t>(edges, 3 * n) : edges);
    auto maker = make_maker(maker_name, stream_seed(seed, 11, 4 * i + 1));
    auto breaker = make_breaker(breakers[rng.below(4)], stream_seed(seed, 11, 4 * i + 2));
    const auto state = play_maker_breaker(n, b, *maker, *breaker, rounds);
    auto defect = replay_defect(state);
    if (!defect && maker_name == "random" && !state.exhausted && state.protagonist.size() != state.rounds) {
      defect = "random Maker edge count differs from rounds played";
    }
    if (!defect) ++mb_ok;
    else if (first_problem.empty()) first_problem = "maker-breaker: " + *defect;
  }
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 4 + rng.below(197);
    const std::size_t edges = n * (n - 1) / 2;
    const std::size_t b = rng.below(8) == 0 ? edges + rng.below(3) : 1 + rng.below(std::max<std::size_t>(1, n / 2));
    const std::string waiter_name = waiters[rng.below(4)];
    auto waiter = make_waiter(waiter_name, stream_seed(seed, 11, 4 * i + 3));
    auto client = make_client(clients[rng.below(3)], stream_seed(seed, 11, 4 * i + 4));
    const auto state = play_client_waiter(n, b, *waiter, *client);
    auto defect = replay_defect(state);
    if (waiter_name != "single") {
      ++bound_checks;
      if (state.protagonist.size() >= edges / (b + 1)) ++bound_ok;
      else if (!defect) defect = "Client below floor(C(n,2)/(b+1))";
    }
    if (!defect) ++cw_ok;
    else if (first_problem.empty()) first_problem = "client-waiter: " + *defect;
  }
  const bool pass = mb_ok == 200 && cw_ok == 200 && bound_ok == bound_checks;
  return verdict(11, pass, format("maker-breaker %zu/200, client-waiter %zu/200, client bound %zu/%zu", mb_ok, cw_ok, bound_ok, bound_checks),
                 Json{{"maker_breaker_ok", mb_ok}, {"client_waiter_ok", cw_ok}, {"bound_checks", bound_checks},
                      {"bound_ok", bound_ok}, {"first_problem", first_problem}});
}

// 12. Random Maker against the greedy-degree Breaker.
Json criterion_maker_demo(std::uint64_t seed) {
  const std::size_t n = 2000;
  const double eps = 0.5;
  PipelineOptions options;
  options.k_floor = (n + 99) / 100;
  std::size_t successes = 0;
  Json runs = Json::array();
  double theory_delta = 0.0;
  bool theory_vacuous = false;
  for (std::size_t s = 0; s < 20; ++s) {
    auto breaker = make_breaker("greedy-degree", 0);
    const auto report = maker_cycle_pipeline(n, eps, *breaker, stream_seed(seed, 12, s), options);
    theory_delta = report.theory_delta;
    theory_vacuous = report.theory_vacuous;
    const std::size_t length = report.certificate ? report.certificate->length() : 0;
    const bool ok = report.audit.passed && report.validated && 100 * length >= n;
    if (ok) ++successes;
    runs.push_back(Json{{"maker_edges", report.graph_edges},
                        {"audit_passed", report.audit.passed},
                        {"worst_excess", report.audit.worst_excess},
                        {"first_violation_size", report.audit.first_violation_size ? Json(*report.audit.first_violation_size) : Json(nullptr)},
                        {"empirical_k", report.empirical_k},
                        {"cycle_length", length},
                        {"validated", report.validated},
                        {"ok", ok}});
  }
  return verdict(12, successes >= 18,
                 format("%zu/20 runs with a passing audit at k = %zu and a validated cycle >= %zu (theoretical delta %.3g, vacuous)",
                        successes, options.k_floor, n / 100, theory_delta),
                 Json{{"k", options.k_floor}, {"successes", successes}, {"theory_delta", theory_delta},
                      {"theory_vacuous", theory_vacuous}, {"runs", runs}});
}

// 13. Criterion evaluators.
Json criterion_sums(std::uint64_t seed) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  Rng rng(stream_seed(seed, 13, 0));
  std::size_t matches = 0;
  double worst_relative = 0.0;
  for (std::size_t f = 0; f < 50; ++f) {
    const std::size_t b = rng.below(11);
    std::vector<std::size_t> family(rng.below(21));
    for (auto& e : family) e = 1 + rng.below(30);
    cpp_rational exact = 0;
    for (std::size_t e : family) exact += cpp_rational(cpp_int(1), boost::multiprecision::pow(cpp_int(b + 1), static_cast<unsigned>(e)));
    const double approx = cw_criterion_sum(b, family).sum;
    const double exact_value = exact.convert_to<double>();
    const double relative = exact == 0 ? std::abs(approx) : std::abs(approx - exact_value) / exact_value;
    worst_relative = std::max(worst_relative, relative);
    if (relative <= 1e-12 && (exact < cpp_rational(1, 2)) == cw_criterion_sum(b, family).holds) ++matches;
  }
  std::size_t monotone_ok = 0;
  const std::tuple<std::size_t, double> settings[] = {{10000, 0.5}, {2000, 0.5}, {1000, 0.2}};
  for (auto [n, eps] : settings) {
    const auto b = static_cast<std::size_t>(std::floor((1.0 - eps) * static_cast<double>(n) / 2.0));
    const auto grid = default_delta_grid(20);
    bool ok = true;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double lo = cw_density_avoidance_sum(n, b, eps, grid[i - 1]).series.log_value;
      const double hi = cw_density_avoidance_sum(n, b, eps, grid[i]).series.log_value;
      ok = ok && !(hi < lo);
    }
    if (ok) ++monotone_ok;
  }
  const bool pass = matches == 50 && monotone_ok == std::size(settings);
  return verdict(13, pass,
                 format("%zu/50 families match exact arithmetic (worst relative error %.2e), avoidance sum monotone in %zu/%zu settings",
                        matches, worst_relative, monotone_ok, std::size(settings)),
                 Json{{"matches", matches}, {"worst_relative_error", worst_relative}, {"monotone_settings", monotone_ok}});
}

}  // namespace

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "acceptance") {
    std::vector<int> ids(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
  }
  if (suite == "smoke") return {1, 2, 4, 6, 7, 8, 13, 14};
  throw InputError("unknown suite '" + std::string(suite) + "'; expected acceptance or smoke");
}

std::string criterion_name(int id) {
  static const char* const kNames[] = {"",
                                       "back-edge property",
                                       "subtree splitting",
                                       "expander cycle soundness",
                                       "bipartite tightness family",
                                       "density cycle soundness",
                                       "flow/enumeration agreement",
                                       "dense-subset proposition",
                                       "affine plane axioms",
                                       "lower-bound coloring structure",
                                       "line-load concentration",
                                       "game legality",
                                       "random Maker end-to-end",
                                       "criterion evaluators",
                                       "reproducibility"};
  if (id < 1 || id > kCriterionCount) throw InputError("no criterion " + std::to_string(id));
  return kNames[id];
}

double criterion_time_limit(int id) {
  switch (id) {
    case 1:
    case 2:
      return 5.0;
    case 3:
      return 180.0;
    case 5:
      return 300.0;
    case 8:
      return 10.0;
    case 12:
      return 120.0;
    default:
      return 0.0;
  }
}

Json run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1:
      return criterion_back_edges(seed);
    case 2:
      return criterion_splitting(seed);
    case 3:
      return criterion_expander(seed);
    case 4:
      return criterion_tightness(seed);
    case 5:
      return criterion_density(seed);
    case 6:
      return criterion_flow(seed);
    case 7:
      return criterion_dense_subset(seed);
    case 8:
      return criterion_planes(seed);
    case 9:
      return criterion_ramsey_structure(seed);
    case 10:
      return criterion_concentration(seed);
    case 11:
      return criterion_games(seed);
    case 12:
      return criterion_maker_demo(seed);
    case 13:
      return criterion_sums(seed);
    default:
      throw InputError("criterion " + std::to_string(id) + " has no standalone run");
  }
}

bool SuiteSummary::passed() const {
  return std::none_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.verdict == "FAIL"; });
}

std::string format_line(const SuiteLine& line) {
  return format("[%s] %2d %-32s %7.2fs  ", line.verdict.c_str(), line.id, line.name.c_str(), line.seconds) + line.detail;
}

SuiteSummary run_suite(std::string_view suite, std::uint64_t seed, std::ostream* progress) {
  SuiteSummary summary;
  summary.suite = std::string(suite);
  const auto ids = suite_criteria(suite);
  for (int id : ids) {
    if (id == kCriterionCount) continue;
    ExperimentConfig config("reproduce");
    config.set("suite", summary.suite);
    config.set("only", std::to_string(id));
    config.set("seed", std::to_string(seed));
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = execute(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    SuiteLine line{id, criterion_name(id), outcome.payload.at("verdict").get<std::string>(),
                   outcome.payload.at("detail").get<std::string>(), seconds};
    const double limit = criterion_time_limit(id);
    if (limit > 0.0 && seconds > limit) {
      line.verdict = "FAIL";
      line.detail += format(" [runtime %.1fs exceeds %.0fs]", seconds, limit);
    }
    summary.records.push_back(make_record(config, outcome, seconds));
    if (progress) *progress << format_line(line) << std::endl;
    summary.lines.push_back(std::move(line));
  }
  if (std::find(ids.begin(), ids.end(), kCriterionCount) != ids.end()) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t identical = 0;
    std::string differing;
    for (const auto& record : summary.records) {
      if (reproduces(record)) {
        ++identical;
      } else {
        differing += (differing.empty() ? "" : ",") + record.at("payload").at("id").dump();
      }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    SuiteLine line{kCriterionCount, criterion_name(kCriterionCount), identical == summary.records.size() ? "PASS" : "FAIL",
                   format("%zu/%zu records re-executed bit-identically", identical, summary.records.size()) +
                       (differing.empty() ? "" : "; differing: " + differing),
                   seconds};
    if (progress) *progress << format_line(line) << std::endl;
    summary.lines.push_back(std::move(line));
  }
  return summary;
}

}  // namespace locyc::harness
