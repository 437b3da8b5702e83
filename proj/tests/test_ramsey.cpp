#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "locyc/errors.hpp"
#include "locyc/ramsey.hpp"
#include "locyc/random_graphs.hpp"
#include "support.hpp"

namespace locyc {
namespace {

// Points as (a, b) pairs; checks the axioms without the plane's own lookups.
void check_axioms_by_hand(const AffinePlane& plane) {
  const std::size_t q = plane.order();
  std::vector<std::set<std::size_t>> lines;
  for (std::size_t id = 0; id < plane.num_lines(); ++id) {
    const auto& pts = plane.line(id);
    ASSERT_EQ(pts.size(), q);
    lines.emplace_back(pts.begin(), pts.end());
  }
  for (std::size_t x = 0; x < q * q; ++x) {
    for (std::size_t y = x + 1; y < q * q; ++y) {
      int through = 0;
      for (const auto& l : lines) through += l.count(x) && l.count(y);
      ASSERT_EQ(through, 1) << "points " << x << " " << y;
    }
  }
  for (std::size_t c = 0; c < plane.num_classes(); ++c) {
    std::set<std::size_t> covered;
    for (std::size_t id : plane.class_lines(c)) {
      ASSERT_EQ(plane.class_of(id), c);
      for (std::size_t p : plane.line(id)) ASSERT_TRUE(covered.insert(p).second) << "class " << c << " overlaps";
    }
    ASSERT_EQ(covered.size(), q * q);
  }
}

TEST(AffinePlane, Counts) {
  const auto p2 = build_affine_plane(2);
  EXPECT_EQ(p2.num_points(), 4u);
  EXPECT_EQ(p2.num_lines(), 6u);
  EXPECT_EQ(p2.num_classes(), 3u);
  const auto p3 = build_affine_plane(3);
  EXPECT_EQ(p3.num_points(), 9u);
  EXPECT_EQ(p3.num_lines(), 12u);
  EXPECT_EQ(p3.num_classes(), 4u);
  EXPECT_FALSE(affine_plane_defect(p3).has_value());
  EXPECT_THROW(build_affine_plane(4), UnsupportedOrder);
}

TEST(AffinePlaneProperty, AxiomsHoldForSmallPrimes) {
  for (std::size_t q : {2, 3, 5, 7, 11, 13}) {
    const auto plane = build_affine_plane(q);
    EXPECT_FALSE(affine_plane_defect(plane).has_value());
    check_axioms_by_hand(plane);
    for (std::size_t x = 0; x < q * q; ++x) EXPECT_EQ(plane.lines_through(x).size(), q + 1);
  }
}

TEST(LowerBound, CycleGraph) {
  const Graph c20 = graphs::cycle(20);
  const auto coloring = lower_bound_coloring(c20, 4, 1);
  EXPECT_EQ(coloring.q, 2u);
  EXPECT_EQ(coloring.degree_threshold, 96u);
  for (std::size_t part : coloring.part) EXPECT_NE(part, 0u);
  const auto plane = build_affine_plane(2);
  EXPECT_FALSE(coloring_defect(c20, plane, coloring).has_value());
  EXPECT_FALSE(confinement_defect(c20, plane, coloring).has_value());
  const auto report = verify_lower_bound_coloring(c20, plane, coloring, 20);
  std::size_t sum = 0;
  for (std::size_t load : report.line_load) sum += load;
  EXPECT_EQ(sum, report.load_sum);
  // An edge lies on one line, or on q + 1 lines when both ends share a part.
  std::size_t expected = 0;
  for (const Edge& e : c20.edges()) {
    expected += coloring.part[static_cast<std::size_t>(e.u)] == coloring.part[static_cast<std::size_t>(e.v)] ? 3 : 1;
  }
  EXPECT_EQ(report.load_sum, expected);
}

TEST(LowerBound, StarCenterAbsorbsEverything) {
  const Graph star = graphs::star(1000);
  const auto coloring = lower_bound_coloring(star, 4, 2);
  EXPECT_EQ(coloring.part[0], 0u);
  for (int c : coloring.colors) EXPECT_EQ(c, 4);
  const auto plane = build_affine_plane(2);
  EXPECT_FALSE(confinement_defect(star, plane, coloring).has_value());
}

TEST(LowerBound, HugeStarHasOnlyShortPaths) {
  // K_{1, r(n-1)+1}: some color holds n - 1 star edges but a star has no
  // path on more than 3 vertices.
  const int r = 5;
  const std::size_t n = 6;
  const Graph star = graphs::star(static_cast<std::size_t>(r) * (n - 1) + 1);
  // Threshold lowered so the center lands in V0 at this size.
  const auto coloring = lower_bound_coloring(star, r, 3, std::size_t{10});
  const Graph mono = color_class(star, coloring.colors, r);
  EXPECT_EQ(mono.num_edges(), static_cast<std::size_t>(r) * (n - 1) + 1);
  const auto check = mono_path_check(mono, n);
  EXPECT_EQ(check.vertices, 3u);
  EXPECT_FALSE(check.reaches_target);
}

TEST(LowerBound, EmptyGraph) {
  const Graph g = graphs::empty(0);
  const auto coloring = lower_bound_coloring(g, 4, 1);
  const auto report = verify_lower_bound_coloring(g, build_affine_plane(2), coloring, 2);
  for (std::size_t load : report.line_load) EXPECT_EQ(load, 0u);
  EXPECT_TRUE(report.kills_path);
}

TEST(LowerBound, Errors) {
  EXPECT_THROW(lower_bound_coloring(graphs::cycle(5), 2, 1), InputError);
  EXPECT_THROW(lower_bound_coloring(graphs::cycle(5), 6, 1), UnsupportedOrder);
  EXPECT_THROW(lower_bound_coloring(graphs::empty(3), 4, 1), InputError);
}

TEST(LowerBoundProperty, StructureOnRandomGraphs) {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = trial % 2 == 0 ? 4 : 5;
    Graph g = sample_gnp({400, 0.01 + 0.02 * rng.uniform01(), rng.next_u64()});
    std::vector<Vertex> keep;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(static_cast<Vertex>(v)) > 0) keep.push_back(static_cast<Vertex>(v));
    }
    g = induced_subgraph(g, VertexSet::from_sorted(keep)).graph;
    const auto coloring = lower_bound_coloring(g, r, rng.next_u64(), 8 + rng.below(10));
    const auto plane = build_affine_plane(static_cast<std::size_t>(r - 2));
    // Recompute every color from the construction.
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const std::size_t x = coloring.part[static_cast<std::size_t>(g.edge(e).u)];
      const std::size_t y = coloring.part[static_cast<std::size_t>(g.edge(e).v)];
      int expected;
      if (x == 0 || y == 0) expected = r;
      else if (x == y) expected = 1;
      else expected = static_cast<int>(plane.class_of(plane.line_through(x - 1, y - 1))) + 1;
      ASSERT_EQ(coloring.colors[e], expected);
    }
    ASSERT_FALSE(coloring_defect(g, plane, coloring).has_value());
    ASSERT_FALSE(confinement_defect(g, plane, coloring).has_value());
  }
}

TEST(LowerBound, ConfinementCheckCatchesBadColors) {
  const Graph g = sample_gnp({300, 0.03, 4});
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) > 0) keep.push_back(static_cast<Vertex>(v));
  }
  const Graph h = induced_subgraph(g, VertexSet::from_sorted(keep)).graph;
  auto coloring = lower_bound_coloring(h, 5, 9);
  for (int& c : coloring.colors) c = 2;  // one class spanning many lines
  const auto plane = build_affine_plane(3);
  EXPECT_TRUE(coloring_defect(h, plane, coloring).has_value());
  EXPECT_TRUE(confinement_defect(h, plane, coloring).has_value());
}

TEST(PathCheck, Examples) {
  EXPECT_EQ(mono_path_check(graphs::path(5), 5).vertices, 5u);
  EXPECT_TRUE(mono_path_check(graphs::path(5), 5).reaches_target);
  EXPECT_EQ(mono_path_check(graphs::cycle(6), 6).vertices, 6u);
  EXPECT_EQ(mono_path_check(graphs::complete_bipartite(3, 3), 6).vertices, 6u);
  EXPECT_TRUE(mono_path_check(graphs::cycle(6), 6).exact);
}

TEST(UpperBound, VacuousAtDeskScale) {
  const auto report = upper_bound_pipeline(100000, 2, Rational(6), 1, {});
  EXPECT_NEAR(report.delta, std::pow(40.0, -3.0), 1e-18);
  EXPECT_EQ(report.k, 1u);
  EXPECT_TRUE(report.vacuous);
}

TEST(UpperBound, CappedProbabilityGivesCompleteGraph) {
  const auto report = upper_bound_pipeline(30, 2, Rational(20), 1, {Coloring::kUniform});
  EXPECT_EQ(report.p, 1.0);
  EXPECT_EQ(report.graph_edges, 435u);
  ASSERT_EQ(report.results.size(), 1u);
  EXPECT_GE(report.results[0].class_edges * 2, 435u);
}

TEST(UpperBound, RunsEndToEnd) {
  const auto report = upper_bound_pipeline(20000, 2, Rational(100), 7, {Coloring::kUniform, Coloring::kAdversarial});
  EXPECT_FALSE(report.vacuous);
  EXPECT_NEAR(report.delta, std::pow(40.0, -100.0 / 96.0), 1e-12);
  for (const auto& result : report.results) {
    ASSERT_TRUE(result.certificate.has_value()) << result.failure;
    EXPECT_TRUE(result.validated);
  }
}

TEST(UpperBound, Errors) {
  EXPECT_THROW(upper_bound_pipeline(100, 2, Rational(5), 1, {}), InputError);
  EXPECT_THROW(upper_bound_pipeline(100, 1, Rational(6), 1, {}), InputError);
}

}  // namespace
}  // namespace locyc
