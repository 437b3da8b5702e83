#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace locyc {

/// Dinic's algorithm on integer capacities. Exact; no shared state.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(std::size_t nodes);

  /// Adds arc from -> to with the given capacity; returns the arc id.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity capacity);
  void reserve_arcs(std::size_t arcs);

  Capacity solve(std::size_t source, std::size_t sink);

  /// After solve(): nodes reachable from the source in the residual graph,
  /// i.e. the source side of the minimum cut closest to the source.
  std::vector<char> source_side(std::size_t source) const;

  Capacity flow_on(std::size_t arc) const { return original_[arc] - residual_[arc]; }

 private:
  bool build_levels(std::size_t source, std::size_t sink);
  Capacity push(std::size_t node, std::size_t sink, Capacity limit);

  std::size_t nodes_;
  std::vector<std::uint32_t> head_;  // first arc of node, or kNone
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> to_;
  std::vector<Capacity> residual_;
  std::vector<Capacity> original_;
  std::vector<std::int32_t> level_;
  std::vector<std::uint32_t> iter_;
};

}  // namespace locyc
