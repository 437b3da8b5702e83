#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locyc/dfs.hpp"
#include "locyc/graph.hpp"
#include "locyc/rational.hpp"

namespace locyc {

/// An explicit cycle together with the objects that certify its length:
/// the split set W, the root-to-v tree path P, the far neighbor v_star on P
/// and the closing edge (w, v_star). All ids refer to the input graph.
struct CycleCertificate {
  std::vector<Vertex> cycle;
  VertexSet witness_w;
  std::vector<Vertex> witness_path;  // root ... split vertex v
  Vertex split_vertex = kNoParent;
  Vertex v_star = kNoParent;
  Edge closing_edge;  // stored as (w, v_star), not normalized
  std::size_t neighborhood_size = 0;  // |N(W)|, in the graph the split ran on
  std::size_t claimed_bound = 0;      // neighborhood_size + 1
  std::size_t k = 0;

  std::size_t length() const noexcept { return cycle.size(); }
};

/// Empty when the certificate's invariants hold against g; otherwise the first
/// violated invariant.
std::optional<std::string> certificate_defect(const Graph& g, const CycleCertificate& cert);
inline bool validate_certificate(const Graph& g, const CycleCertificate& cert) { return !certificate_defect(g, cert); }

/// Parameters of the local-sparsity cycle bound.
struct DensityParams {
  Rational c1;
  Rational c2;
  std::size_t k = 0;

  /// Throws InputError unless c1 > c2 > 1 and k >= 1.
  void check() const;
  /// (k/2 - 1)(sqrt(c1/c2) - 1) as a real number.
  double guarantee_slack() const;
  /// True when guarantee_slack() >= 2, the regime where the bound is proven.
  bool precondition_holds() const { return guarantee_slack() >= 2.0; }
  /// guarantee_slack() + 1: the cycle length implied by the hypotheses.
  double length_bound() const { return guarantee_slack() + 1.0; }
};

/// Extracts a cycle of length >= |N(W)| + 1 from a DFS tree split, where W is
/// the union of subtrees returned by split_under_vertex. Throws
/// PreconditionError when |V| <= k, and ExpansionViolated (with the witness W)
/// when no component has more than k vertices.
CycleCertificate extract_cycle_expander(const Graph& g, std::size_t k);
CycleCertificate extract_cycle_expander(const Graph& g, std::size_t k, std::span<const Vertex> order);

enum class AuditMode { kExhaustive, kSampled };

struct ExpansionAudit {
  AuditMode mode = AuditMode::kExhaustive;
  std::size_t min_size = 0;  // max(1, floor(k/2))
  std::size_t max_size = 0;  // k
  std::size_t min_neighborhood = 0;
  VertexSet witness;
  std::size_t examined = 0;
};

/// Largest graph the exhaustive audits accept.
inline constexpr std::size_t kExhaustiveAuditCap = 22;

/// Minimum of |N(W)| over max(1, floor(k/2)) <= |W| <= k. Exhaustive mode is
/// exact (n <= kExhaustiveAuditCap); sampled mode returns an upper bound from
/// `samples` uniform subsets and `samples` randomly grown connected sets per
/// size. Requires |V| > k.
ExpansionAudit audit_expansion(const Graph& g, std::size_t k, AuditMode mode, std::size_t samples = 64,
                               std::uint64_t seed = 0);

/// Some nonempty W with incident_edge_count(W) < c1 |W|, or nullopt. Decided
/// exactly by a max-flow: source -> vertex (c1), vertex -> incident edge
/// (unbounded), edge -> sink (1), all scaled by c1's denominator. A violating
/// W exists iff the flow is short of c1 n; the residual-reachable vertices
/// then form one.
std::optional<VertexSet> find_violating_set(const Graph& g, const Rational& c1);

/// Induced subgraph with edge/vertex ratio >= c1, connected, with no subset
/// incident to fewer than c1 |W| of its edges.
struct DenseCore {
  VertexSet vertices;
  std::size_t edge_count = 0;
  double ratio = 0.0;
};

/// Peels violating sets until none remain, then keeps the component of largest
/// ratio (ties: smallest vertex id); repeats until stable. Throws
/// PreconditionError unless |E| >= c1 |V| and InputError unless c1 > 0.
DenseCore find_dense_core(const Graph& g, const Rational& c1);

/// Same split-and-close construction as extract_cycle_expander, run inside
/// find_dense_core(g, c1). Local sparsity is the caller's to audit. Throws
/// PreconditionError when |V| <= k or |E| < c1 |V|, DensityInsufficient when
/// the core has at most k vertices.
CycleCertificate extract_cycle_density(const Graph& g, const DensityParams& params);

struct DenseSubset {
  VertexSet r;
  std::size_t count = 0;
  double bound = 0.0;      // m ((k1 - 1) / (n - 1))^2, i.e. k2 = n - k1
  bool confirmed = false;  // count > bound
};

inline constexpr std::size_t kDenseSubsetCap = 18;

/// Exhaustive maximum-edge subset of exactly k1 vertices, 1 <= k1 < n <= 18.
DenseSubset dense_subset_oracle(const Graph& g, std::size_t k1);

}  // namespace locyc
