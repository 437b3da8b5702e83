#include "locyc/maxflow.hpp"

#include <algorithm>
#include <limits>

#include "locyc/errors.hpp"

namespace locyc {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
}

MaxFlow::MaxFlow(std::size_t nodes) : nodes_(nodes), head_(nodes, kNone) {}

void MaxFlow::reserve_arcs(std::size_t arcs) {
  next_.reserve(2 * arcs);
  to_.reserve(2 * arcs);
  residual_.reserve(2 * arcs);
  original_.reserve(2 * arcs);
}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, Capacity capacity) {
  if (to_.size() + 2 >= kNone) throw SizeCapError("flow network too large");
  const std::size_t id = to_.size();
  to_.push_back(static_cast<std::uint32_t>(to));
  residual_.push_back(capacity);
  original_.push_back(capacity);
  next_.push_back(head_[from]);
  head_[from] = static_cast<std::uint32_t>(id);

  to_.push_back(static_cast<std::uint32_t>(from));
  residual_.push_back(0);
  original_.push_back(0);
  next_.push_back(head_[to]);
  head_[to] = static_cast<std::uint32_t>(id + 1);
  return id;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  level_.assign(nodes_, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(nodes_);
  level_[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t v = queue[qi];
    for (std::uint32_t a = head_[v]; a != kNone; a = next_[a]) {
      if (residual_[a] > 0 && level_[to_[a]] < 0) {
        level_[to_[a]] = level_[v] + 1;
        queue.push_back(to_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

// Level graphs of the networks built here are shallow (a handful of layers),
// so the recursion depth stays small.
MaxFlow::Capacity MaxFlow::push(std::size_t node, std::size_t sink, Capacity limit) {
  if (node == sink) return limit;
  for (std::uint32_t& a = iter_[node]; a != kNone; a = next_[a]) {
    const std::uint32_t u = to_[a];
    if (residual_[a] <= 0 || level_[u] != level_[node] + 1) continue;
    Capacity pushed = push(u, sink, std::min(limit, residual_[a]));
    if (pushed > 0) {
      residual_[a] -= pushed;
      residual_[a ^ 1u] += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::solve(std::size_t source, std::size_t sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    iter_ = head_;
    while (Capacity f = push(source, sink, std::numeric_limits<Capacity>::max())) total += f;
  }
  return total;
}

std::vector<char> MaxFlow::source_side(std::size_t source) const {
  std::vector<char> seen(nodes_, 0);
  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(source)};
  seen[source] = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t a = head_[v]; a != kNone; a = next_[a]) {
      if (residual_[a] > 0 && !seen[to_[a]]) {
        seen[to_[a]] = 1;
        stack.push_back(to_[a]);
      }
    }
  }
  return seen;
}

}  // namespace locyc
