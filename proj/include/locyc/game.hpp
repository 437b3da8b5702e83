#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locyc/cycles.hpp"
#include "locyc/graph.hpp"
#include "locyc/random_graphs.hpp"

namespace locyc {

enum class Owner : std::uint8_t { kFree, kProtagonist, kAntagonist };
enum class Actor : std::uint8_t { kMaker, kBreaker, kWaiter, kClient };
enum class Variant : std::uint8_t { kMakerBreaker, kClientWaiter };

std::string_view actor_name(Actor actor);

/// Edges of K_n with ids v(v-1)/2 + u for u < v, their owners, and the free
/// edges in an unordered array with O(1) removal.
class Board {
 public:
  explicit Board(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return owner_.size(); }
  std::size_t free_count() const noexcept { return free_.size(); }
  /// Free edge ids in no particular order; invalidated by claim().
  std::span<const std::size_t> free_edges() const noexcept { return free_; }

  static std::size_t edge_id(Vertex a, Vertex b);
  static Edge edge_of(std::size_t id);

  Owner owner(std::size_t id) const { return owner_[id]; }
  bool is_free(std::size_t id) const { return id < owner_.size() && owner_[id] == Owner::kFree; }
  std::size_t degree(Owner side, Vertex v) const;
  std::size_t free_degree(Vertex v) const { return degree(Owner::kFree, v); }

  void claim(std::size_t id, Owner side);

 private:
  std::size_t n_;
  std::vector<Owner> owner_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> free_pos_;
  std::vector<std::size_t> deg_;  // 3 counters per vertex, indexed by Owner
};

/// What a strategy sees: the board and the round about to be played.
struct GameView {
  const Board& board;
  std::size_t round;
  std::size_t bias;
};

class MakerStrategy {
 public:
  virtual ~MakerStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::size_t choose(const GameView& view) = 0;
};

class BreakerStrategy {
 public:
  virtual ~BreakerStrategy() = default;
  virtual std::string name() const = 0;
  /// Exactly `quota` distinct free edges.
  virtual std::vector<std::size_t> choose(const GameView& view, std::size_t quota) = 0;
};

class WaiterStrategy {
 public:
  virtual ~WaiterStrategy() = default;
  virtual std::string name() const = 0;
  /// Between 1 and `max_size` distinct free edges.
  virtual std::vector<std::size_t> offer(const GameView& view, std::size_t max_size) = 0;
};

class ClientStrategy {
 public:
  virtual ~ClientStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::size_t pick(const GameView& view, std::span<const std::size_t> offer) = 0;
};

/// Maker: random (uniform free edge), greedy (largest own degree sum), first (smallest id).
std::unique_ptr<MakerStrategy> make_maker(std::string_view name, std::uint64_t seed);
/// Breaker: greedy-degree (edges at Maker's highest-degree vertices), random,
/// passive (largest free ids), first (smallest free ids).
std::unique_ptr<BreakerStrategy> make_breaker(std::string_view name, std::uint64_t seed);
/// Waiter: random (b+1 random free edges), greedy-degree (b+1 free edges
/// among Client's lowest-degree vertices), all (the b+1 smallest ids), single
/// (the smallest id alone).
std::unique_ptr<WaiterStrategy> make_waiter(std::string_view name, std::uint64_t seed);
/// Client: greedy-sparse (prefer edges that join two of its components, then
/// the smallest degree sum), random, first.
std::unique_ptr<ClientStrategy> make_client(std::string_view name, std::uint64_t seed);

/// The seeded uniform Maker.
std::unique_ptr<MakerStrategy> random_maker_strategy(std::uint64_t seed);

struct TranscriptEntry {
  std::size_t round = 0;
  Actor actor = Actor::kMaker;
  Edge edge;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct GameState {
  Variant variant = Variant::kMakerBreaker;
  std::size_t n = 0;
  std::size_t bias = 0;
  std::size_t rounds = 0;  // rounds started
  bool exhausted = false;  // the board ran out
  std::vector<TranscriptEntry> transcript;
  std::vector<Edge> protagonist;  // Maker or Client, in claim order
  std::vector<Edge> antagonist;   // Breaker or Waiter
  /// Free edges at the start of each protagonist turn (Maker-Breaker) or each
  /// offer (Client-Waiter).
  std::vector<std::size_t> free_at_turn;
};

/// Alternating play starting with Maker for `rounds` Maker moves or until the
/// board is exhausted. Throws StrategyFault on an illegal move.
GameState play_maker_breaker(std::size_t n, std::size_t bias, MakerStrategy& maker, BreakerStrategy& breaker,
                             std::size_t rounds);

/// Rounds until the board is exhausted. Throws StrategyFault on an illegal move.
GameState play_client_waiter(std::size_t n, std::size_t bias, WaiterStrategy& waiter, ClientStrategy& client);

/// Replays the transcript from an empty board and checks claims, quotas and
/// the final edge sets. Empty when everything matches.
std::optional<std::string> replay_defect(const GameState& state);

Graph protagonist_graph(const GameState& state);

struct PipelineOptions {
  std::size_t k_floor = 0;           // lower bound on the split size k
  std::size_t audit_samples = 16;    // uniform subsets per size in sampled audits
  std::size_t audit_greedy_starts = 0;
};

struct GamePipelineReport {
  std::size_t n = 0;
  double eps = 0.0;
  std::size_t bias = 0;
  std::size_t rounds_planned = 0;  // Maker-Breaker only
  GameState game;
  std::size_t graph_edges = 0;
  DensityParams params;
  double theory_delta = 0.0;
  std::size_t theory_k = 0;
  bool theory_vacuous = false;  // the theoretical k does not meet the length-bound precondition
  std::size_t empirical_k = 0; // largest audited size below the first violation found
  DensityReport audit;
  std::optional<CycleCertificate> certificate;
  bool validated = false;
  std::string failure;
  double free_floor = 0.0;     // eps n^2 / 3
  std::size_t turns_below_floor = 0;
};

/// b = floor((1-eps) n / 2); ceil((1+eps/2) n) random Maker moves against
/// `breaker`; audit with c2 = 1+eps/4 and extract with c1 = 1+eps/2 at
/// k = max(floor(25^(-4/eps) n), k_floor).
GamePipelineReport maker_cycle_pipeline(std::size_t n, double eps, BreakerStrategy& breaker, std::uint64_t seed,
                                        const PipelineOptions& options = {});

/// b = floor((1-eps) n / 2); play to exhaustion; audit with c2 = 1+eps/2 and
/// extract with c1 = 1+eps at k = max(floor(delta n), k_floor), delta the
/// largest grid value passing the avoidance-sum criterion.
GamePipelineReport client_cycle_pipeline(std::size_t n, double eps, WaiterStrategy& waiter, ClientStrategy& client,
                                         std::uint64_t seed, const PipelineOptions& options = {});

}  // namespace locyc
