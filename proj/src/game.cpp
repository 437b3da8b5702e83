#include "locyc/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "locyc/criteria.hpp"
#include "locyc/errors.hpp"
#include "locyc/rng.hpp"

namespace locyc {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }
std::size_t side_index(Owner side) { return static_cast<std::size_t>(side); }

}  // namespace

std::string_view actor_name(Actor actor) {
  switch (actor) {
    case Actor::kMaker:
      return "maker";
    case Actor::kBreaker:
      return "breaker";
    case Actor::kWaiter:
      return "waiter";
    case Actor::kClient:
      return "client";
  }
  return "unknown";
}

Board::Board(std::size_t n) : n_(n), owner_(n < 2 ? 0 : n * (n - 1) / 2, Owner::kFree), deg_(3 * n, 0) {
  free_.resize(owner_.size());
  std::iota(free_.begin(), free_.end(), std::size_t{0});
  free_pos_ = free_;
  for (std::size_t v = 0; v < n; ++v) deg_[3 * v + side_index(Owner::kFree)] = n - 1;
}

std::size_t Board::edge_id(Vertex a, Vertex b) {
  const auto u = static_cast<std::size_t>(std::min(a, b));
  const auto v = static_cast<std::size_t>(std::max(a, b));
  return v * (v - 1) / 2 + u;
}

Edge Board::edge_of(std::size_t id) {
  auto v = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(id))) / 2.0);
  while (v * (v - 1) / 2 > id) --v;
  while ((v + 1) * v / 2 <= id) ++v;
  return {static_cast<Vertex>(id - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

std::size_t Board::degree(Owner side, Vertex v) const { return deg_[3 * at(v) + side_index(side)]; }

void Board::claim(std::size_t id, Owner side) {
  if (!is_free(id)) throw InputError("edge " + std::to_string(id) + " is not free");
  if (side == Owner::kFree) throw InputError("cannot claim an edge for nobody");
  owner_[id] = side;
  const std::size_t pos = free_pos_[id];
  free_[pos] = free_.back();
  free_pos_[free_[pos]] = pos;
  free_.pop_back();
  const Edge e = edge_of(id);
  for (Vertex x : {e.u, e.v}) {
    --deg_[3 * at(x) + side_index(Owner::kFree)];
    ++deg_[3 * at(x) + side_index(side)];
  }
}

namespace {

// `count` distinct free edges chosen uniformly.
std::vector<std::size_t> sample_free(const Board& board, std::size_t count, Rng& rng) {
  const auto free = board.free_edges();
  std::vector<std::size_t> out;
  if (2 * count > free.size()) {
    std::vector<std::size_t> pool(free.begin(), free.end());
    for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
  }
  std::vector<std::size_t> positions;
  positions.reserve(count);
  while (positions.size() < count) {
    const std::size_t pos = rng.below(free.size());
    if (std::find(positions.begin(), positions.end(), pos) == positions.end()) positions.push_back(pos);
  }
  for (std::size_t pos : positions) out.push_back(free[pos]);
  return out;
}

// Scans ids upward (or downward) from a cursor that only moves forward within
// one game; claimed edges never become free again.
class IdScanner {
 public:
  explicit IdScanner(bool descending) : descending_(descending) {}

  std::vector<std::size_t> take(const GameView& view, std::size_t count) {
    const std::size_t total = view.board.num_edges();
    if (view.round <= 1 || total != total_) {
      total_ = total;
      cursor_ = 0;
    }
    std::vector<std::size_t> out;
    for (std::size_t step = cursor_; step < total && out.size() < count; ++step) {
      const std::size_t id = descending_ ? total - 1 - step : step;
      if (view.board.is_free(id)) out.push_back(id);
      if (out.empty()) cursor_ = step + 1;
    }
    return out;
  }

 private:
  bool descending_;
  std::size_t total_ = 0;
  std::size_t cursor_ = 0;
};

// Free edges between vertices taken in `order`, pairs visited as (order[i],
// order[j]) for i < j in lexicographic order of positions; vertices without
// free edges are skipped.
std::vector<std::size_t> pairs_in_order(const Board& board, const std::vector<Vertex>& order, std::size_t count) {
  std::vector<std::size_t> out;
  std::vector<char> done(board.n(), 0);
  for (std::size_t i = 0; i < order.size() && out.size() < count; ++i) {
    const Vertex v = order[i];
    done[at(v)] = 1;
    if (board.free_degree(v) == 0) continue;
    for (std::size_t j = 0; j < order.size() && out.size() < count; ++j) {
      const Vertex u = order[j];
      if (done[at(u)]) continue;
      const std::size_t id = Board::edge_id(u, v);
      if (board.is_free(id)) out.push_back(id);
    }
  }
  return out;
}

std::vector<Vertex> vertices_by_degree(const Board& board, Owner side, bool descending) {
  std::vector<Vertex> order(board.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const std::size_t da = board.degree(side, a);
    const std::size_t db = board.degree(side, b);
    return descending ? da > db : da < db;
  });
  return order;
}

class RandomMaker final : public MakerStrategy {
 public:
  explicit RandomMaker(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::size_t choose(const GameView& view) override {
    const auto free = view.board.free_edges();
    return free[rng_.below(free.size())];
  }

 private:
  Rng rng_;
};

class GreedyMaker final : public MakerStrategy {
 public:
  std::string name() const override { return "greedy"; }
  std::size_t choose(const GameView& view) override {
    std::size_t best = 0;
    std::size_t best_score = 0;
    bool first = true;
    for (std::size_t id : view.board.free_edges()) {
      const Edge e = Board::edge_of(id);
      const std::size_t score = view.board.degree(Owner::kProtagonist, e.u) + view.board.degree(Owner::kProtagonist, e.v);
      if (first || score > best_score || (score == best_score && id < best)) {
        best = id;
        best_score = score;
        first = false;
      }
    }
    return best;
  }
};

class FirstMaker final : public MakerStrategy {
 public:
  std::string name() const override { return "first"; }
  std::size_t choose(const GameView& view) override { return scanner_.take(view, 1).front(); }

 private:
  IdScanner scanner_{false};
};

class GreedyDegreeBreaker final : public BreakerStrategy {
 public:
  std::string name() const override { return "greedy-degree"; }
  std::vector<std::size_t> choose(const GameView& view, std::size_t quota) override {
    return pairs_in_order(view.board, vertices_by_degree(view.board, Owner::kProtagonist, true), quota);
  }
};

class RandomBreaker final : public BreakerStrategy {
 public:
  explicit RandomBreaker(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::vector<std::size_t> choose(const GameView& view, std::size_t quota) override {
    return sample_free(view.board, quota, rng_);
  }

 private:
  Rng rng_;
};

class ScanBreaker final : public BreakerStrategy {
 public:
  explicit ScanBreaker(bool passive) : passive_(passive), scanner_(passive) {}
  std::string name() const override { return passive_ ? "passive" : "first"; }
  std::vector<std::size_t> choose(const GameView& view, std::size_t quota) override { return scanner_.take(view, quota); }

 private:
  bool passive_;
  IdScanner scanner_;
};

class RandomWaiter final : public WaiterStrategy {
 public:
  explicit RandomWaiter(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::vector<std::size_t> offer(const GameView& view, std::size_t max_size) override {
    return sample_free(view.board, max_size, rng_);
  }

 private:
  Rng rng_;
};

class GreedyDegreeWaiter final : public WaiterStrategy {
 public:
  std::string name() const override { return "greedy-degree"; }
  std::vector<std::size_t> offer(const GameView& view, std::size_t max_size) override {
    return pairs_in_order(view.board, vertices_by_degree(view.board, Owner::kProtagonist, false), max_size);
  }
};

class ScanWaiter final : public WaiterStrategy {
 public:
  explicit ScanWaiter(bool single) : single_(single) {}
  std::string name() const override { return single_ ? "single" : "all"; }
  std::vector<std::size_t> offer(const GameView& view, std::size_t max_size) override {
    return scanner_.take(view, single_ ? 1 : max_size);
  }

 private:
  bool single_;
  IdScanner scanner_{false};
};

class GreedySparseClient final : public ClientStrategy {
 public:
  std::string name() const override { return "greedy-sparse"; }
  std::size_t pick(const GameView& view, std::span<const std::size_t> offer) override {
    if (view.round <= 1 || parent_.size() != view.board.n()) {
      parent_.resize(view.board.n());
      std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t best = offer.front();
    std::tuple<int, std::size_t, std::size_t> best_key{2, 0, 0};
    for (std::size_t id : offer) {
      const Edge e = Board::edge_of(id);
      const std::tuple<int, std::size_t, std::size_t> key{
          find(e.u) == find(e.v) ? 1 : 0,
          view.board.degree(Owner::kProtagonist, e.u) + view.board.degree(Owner::kProtagonist, e.v), id};
      if (key < best_key) {
        best_key = key;
        best = id;
      }
    }
    const Edge chosen = Board::edge_of(best);
    parent_[at(find(chosen.u))] = find(chosen.v);
    return best;
  }

 private:
  Vertex find(Vertex v) {
    while (parent_[at(v)] != v) {
      parent_[at(v)] = parent_[at(parent_[at(v)])];
      v = parent_[at(v)];
    }
    return v;
  }

  std::vector<Vertex> parent_;
};

class RandomClient final : public ClientStrategy {
 public:
  explicit RandomClient(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::size_t pick(const GameView&, std::span<const std::size_t> offer) override { return offer[rng_.below(offer.size())]; }

 private:
  Rng rng_;
};

class FirstClient final : public ClientStrategy {
 public:
  std::string name() const override { return "first"; }
  std::size_t pick(const GameView&, std::span<const std::size_t> offer) override {
    return *std::min_element(offer.begin(), offer.end());
  }
};

}  // namespace

std::unique_ptr<MakerStrategy> make_maker(std::string_view name, std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomMaker>(seed);
  if (name == "greedy") return std::make_unique<GreedyMaker>();
  if (name == "first") return std::make_unique<FirstMaker>();
  throw InputError("unknown maker strategy '" + std::string(name) + "'");
}

std::unique_ptr<BreakerStrategy> make_breaker(std::string_view name, std::uint64_t seed) {
  if (name == "greedy-degree" || name == "greedy") return std::make_unique<GreedyDegreeBreaker>();
  if (name == "random") return std::make_unique<RandomBreaker>(seed);
  if (name == "passive") return std::make_unique<ScanBreaker>(true);
  if (name == "first") return std::make_unique<ScanBreaker>(false);
  throw InputError("unknown breaker strategy '" + std::string(name) + "'");
}

std::unique_ptr<WaiterStrategy> make_waiter(std::string_view name, std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomWaiter>(seed);
  if (name == "greedy-degree" || name == "greedy") return std::make_unique<GreedyDegreeWaiter>();
  if (name == "all") return std::make_unique<ScanWaiter>(false);
  if (name == "single") return std::make_unique<ScanWaiter>(true);
  throw InputError("unknown waiter strategy '" + std::string(name) + "'");
}

std::unique_ptr<ClientStrategy> make_client(std::string_view name, std::uint64_t seed) {
  if (name == "greedy-sparse" || name == "greedy") return std::make_unique<GreedySparseClient>();
  if (name == "random") return std::make_unique<RandomClient>(seed);
  if (name == "first") return std::make_unique<FirstClient>();
  throw InputError("unknown client strategy '" + std::string(name) + "'");
}

std::unique_ptr<MakerStrategy> random_maker_strategy(std::uint64_t seed) { return std::make_unique<RandomMaker>(seed); }

namespace {

void claim_checked(Board& board, std::size_t id, Owner side, Actor actor, std::size_t round, GameState& state,
                   std::vector<Edge>& sink) {
  if (!board.is_free(id)) {
    throw StrategyFault(std::string(actor_name(actor)), round, "edge id " + std::to_string(id) + " is not free");
  }
  board.claim(id, side);
  const Edge e = Board::edge_of(id);
  state.transcript.push_back({round, actor, e});
  sink.push_back(e);
}

}  // namespace

GameState play_maker_breaker(std::size_t n, std::size_t bias, MakerStrategy& maker, BreakerStrategy& breaker,
                             std::size_t rounds) {
  if (bias == 0) throw InputError("bias must be at least 1");
  if (rounds == 0) throw InputError("rounds must be at least 1");
  Board board(n);
  GameState state;
  state.variant = Variant::kMakerBreaker;
  state.n = n;
  state.bias = bias;
  for (std::size_t round = 1; round <= rounds; ++round) {
    if (board.free_count() == 0) {
      state.exhausted = true;
      break;
    }
    state.rounds = round;
    state.free_at_turn.push_back(board.free_count());
    const std::size_t pick = maker.choose({board, round, bias});
    claim_checked(board, pick, Owner::kProtagonist, Actor::kMaker, round, state, state.protagonist);
    const std::size_t quota = std::min(bias, board.free_count());
    if (quota > 0) {
      const auto claims = breaker.choose({board, round, bias}, quota);
      if (claims.size() != quota) {
        throw StrategyFault("breaker", round,
                            "claimed " + std::to_string(claims.size()) + " edges, quota is " + std::to_string(quota));
      }
      for (std::size_t id : claims) claim_checked(board, id, Owner::kAntagonist, Actor::kBreaker, round, state, state.antagonist);
    }
    if (board.free_count() == 0) state.exhausted = true;
  }
  return state;
}

GameState play_client_waiter(std::size_t n, std::size_t bias, WaiterStrategy& waiter, ClientStrategy& client) {
  if (bias == 0) throw InputError("bias must be at least 1");
  Board board(n);
  GameState state;
  state.variant = Variant::kClientWaiter;
  state.n = n;
  state.bias = bias;
  state.exhausted = true;
  std::vector<char> offered(board.num_edges(), 0);
  for (std::size_t round = 1; board.free_count() > 0; ++round) {
    state.rounds = round;
    state.free_at_turn.push_back(board.free_count());
    const std::size_t max_size = std::min(bias + 1, board.free_count());
    const auto offer = waiter.offer({board, round, bias}, max_size);
    if (offer.empty() || offer.size() > max_size) {
      throw StrategyFault("waiter", round,
                          "offered " + std::to_string(offer.size()) + " edges, allowed 1.." + std::to_string(max_size));
    }
    for (std::size_t id : offer) {
      if (!board.is_free(id) || offered[id]) {
        throw StrategyFault("waiter", round, "offered edge id " + std::to_string(id) + " twice or while claimed");
      }
      offered[id] = 1;
    }
    const std::size_t pick = client.pick({board, round, bias}, offer);
    if (std::find(offer.begin(), offer.end(), pick) == offer.end()) {
      throw StrategyFault("client", round, "picked edge id " + std::to_string(pick) + " outside the offer");
    }
    claim_checked(board, pick, Owner::kProtagonist, Actor::kClient, round, state, state.protagonist);
    for (std::size_t id : offer) {
      if (id != pick) claim_checked(board, id, Owner::kAntagonist, Actor::kWaiter, round, state, state.antagonist);
    }
  }
  return state;
}

std::optional<std::string> replay_defect(const GameState& state) {
  Board board(state.n);
  std::vector<Edge> protagonist;
  std::vector<Edge> antagonist;
  const bool mb = state.variant == Variant::kMakerBreaker;
  const Actor lead = mb ? Actor::kMaker : Actor::kClient;
  const Actor follow = mb ? Actor::kBreaker : Actor::kWaiter;
  std::size_t i = 0;
  std::size_t expected_round = 1;
  const auto& t = state.transcript;
  while (i < t.size()) {
    const std::size_t round = t[i].round;
    const std::string where = "round " + std::to_string(round);
    if (round != expected_round) return where + ": rounds out of sequence";
    const std::size_t free_before = board.free_count();
    std::size_t leads = 0;
    std::size_t follows = 0;
    for (; i < t.size() && t[i].round == round; ++i) {
      const Edge e = t[i].edge;
      if (e.u < 0 || e.v <= e.u || static_cast<std::size_t>(e.v) >= state.n) return where + ": edge out of range";
      const std::size_t id = Board::edge_id(e.u, e.v);
      if (!board.is_free(id)) return where + ": edge claimed twice";
      if (t[i].actor == lead) {
        if (follows > 0 || leads > 0) return where + ": protagonist move out of order";
        ++leads;
        board.claim(id, Owner::kProtagonist);
        protagonist.push_back(e);
      } else if (t[i].actor == follow) {
        if (leads == 0) return where + ": antagonist moved before the protagonist";
        ++follows;
        board.claim(id, Owner::kAntagonist);
        antagonist.push_back(e);
      } else {
        return where + ": actor does not belong to this game";
      }
    }
    if (leads != 1) return where + ": protagonist did not claim exactly one edge";
    if (mb) {
      if (follows != std::min(state.bias, free_before - 1)) return where + ": breaker quota not met";
    } else {
      if (follows > state.bias) return where + ": offer larger than b + 1";
    }
    ++expected_round;
  }
  if (expected_round - 1 != state.rounds) return "round count does not match the transcript";
  if (!mb && board.free_count() != 0) return "client-waiter game stopped before the board was exhausted";
  if (protagonist != state.protagonist || antagonist != state.antagonist) return "edge sets differ from the replay";
  return std::nullopt;
}

Graph protagonist_graph(const GameState& state) {
  std::vector<Edge> edges(state.protagonist.begin(), state.protagonist.end());
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(state.n, std::move(edges));
}

namespace {

std::size_t half_bias(std::size_t n, double eps) {
  return static_cast<std::size_t>(std::floor((1.0 - eps) * static_cast<double>(n) / 2.0 + 1e-9));
}

void finish_pipeline(GamePipelineReport& report, const PipelineOptions& options, std::uint64_t audit_seed) {
  const Graph g = protagonist_graph(report.game);
  report.graph_edges = g.num_edges();
  report.free_floor = report.eps * static_cast<double>(report.n) * static_cast<double>(report.n) / 3.0;
  for (std::size_t f : report.game.free_at_turn) {
    if (static_cast<double>(f) < report.free_floor) ++report.turns_below_floor;
  }
  report.params.k = std::max({report.theory_k, options.k_floor, std::size_t{1}});
  DensityAuditOptions audit;
  audit.mode = report.n <= kExhaustiveAuditCap ? AuditMode::kExhaustive : AuditMode::kSampled;
  audit.samples = options.audit_samples;
  audit.greedy_starts = options.audit_greedy_starts;
  audit.seed = audit_seed;
  report.audit = audit_local_density(g, report.params.c2, report.params.k, audit);
  report.empirical_k = report.audit.first_violation_size ? *report.audit.first_violation_size - 1 : report.audit.k_max;
  try {
    report.certificate = extract_cycle_density(g, report.params);
    report.validated = validate_certificate(g, *report.certificate);
  } catch (const HypothesisFailure& e) {
    report.failure = e.what();
  }
}

}  // namespace

GamePipelineReport maker_cycle_pipeline(std::size_t n, double eps, BreakerStrategy& breaker, std::uint64_t seed,
                                        const PipelineOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  GamePipelineReport report;
  report.n = n;
  report.eps = eps;
  report.bias = half_bias(n, eps);
  if (report.bias == 0) throw InputError("bias floor((1-eps) n / 2) is zero; increase n");
  report.rounds_planned = static_cast<std::size_t>(std::ceil((1.0 + eps / 2.0) * static_cast<double>(n) - 1e-9));
  report.params.c1 = Rational::from_double(1.0 + eps / 2.0);
  report.params.c2 = Rational::from_double(1.0 + eps / 4.0);
  report.theory_delta = std::pow(25.0, -4.0 / eps);
  report.theory_k = static_cast<std::size_t>(std::floor(report.theory_delta * static_cast<double>(n)));
  report.theory_vacuous = !DensityParams{report.params.c1, report.params.c2, report.theory_k}.precondition_holds();

  auto maker = random_maker_strategy(derive_seed(seed, "maker"));
  report.game = play_maker_breaker(n, report.bias, *maker, breaker, report.rounds_planned);
  finish_pipeline(report, options, derive_seed(seed, "audit"));
  return report;
}

GamePipelineReport client_cycle_pipeline(std::size_t n, double eps, WaiterStrategy& waiter, ClientStrategy& client,
                                         std::uint64_t seed, const PipelineOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  GamePipelineReport report;
  report.n = n;
  report.eps = eps;
  report.bias = half_bias(n, eps);
  if (report.bias == 0) throw InputError("bias floor((1-eps) n / 2) is zero; increase n");
  report.params.c1 = Rational::from_double(1.0 + eps);
  report.params.c2 = Rational::from_double(1.0 + eps / 2.0);
  report.theory_delta = largest_passing_delta(n, report.bias, eps, default_delta_grid()).value_or(0.0);
  report.theory_k = static_cast<std::size_t>(std::floor(report.theory_delta * static_cast<double>(n)));
  report.theory_vacuous = !DensityParams{report.params.c1, report.params.c2, report.theory_k}.precondition_holds();

  report.game = play_client_waiter(n, report.bias, waiter, client);
  finish_pipeline(report, options, derive_seed(seed, "audit"));
  return report;
}

}  // namespace locyc
