#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "locyc/errors.hpp"
#include "locyc/game.hpp"
#include "locyc/rng.hpp"

namespace locyc {
namespace {

// A Maker that always tries to claim edge 0, legal or not.
class StubbornMaker : public MakerStrategy {
 public:
  std::string name() const override { return "stubborn"; }
  std::size_t choose(const GameView&) override { return 0; }
};

// Offers every free edge regardless of the size limit.
class GreedyWaiter : public WaiterStrategy {
 public:
  std::string name() const override { return "everything"; }
  std::vector<std::size_t> offer(const GameView& view, std::size_t) override {
    return {view.board.free_edges().begin(), view.board.free_edges().end()};
  }
};

std::set<Edge> as_set(const std::vector<Edge>& edges) { return {edges.begin(), edges.end()}; }

TEST(Board, IdsRoundTrip) {
  for (Vertex v = 1; v < 30; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const std::size_t id = Board::edge_id(u, v);
      EXPECT_EQ(id, static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u));
      EXPECT_EQ(Board::edge_of(id), (Edge{u, v}));
      EXPECT_EQ(Board::edge_id(v, u), id);
    }
  }
}

TEST(Board, ClaimsTrackDegrees) {
  Board board(5);
  EXPECT_EQ(board.free_count(), 10u);
  board.claim(Board::edge_id(0, 1), Owner::kProtagonist);
  board.claim(Board::edge_id(0, 2), Owner::kAntagonist);
  EXPECT_EQ(board.free_count(), 8u);
  EXPECT_EQ(board.degree(Owner::kProtagonist, 0), 1u);
  EXPECT_EQ(board.degree(Owner::kAntagonist, 0), 1u);
  EXPECT_EQ(board.free_degree(0), 2u);
  EXPECT_FALSE(board.is_free(Board::edge_id(0, 1)));
}

TEST(MakerBreaker, SmallBookkeeping) {
  auto maker = make_maker("greedy", 1);
  auto breaker = make_breaker("greedy-degree", 2);
  const auto state = play_maker_breaker(4, 1, *maker, *breaker, 3);
  EXPECT_EQ(state.protagonist.size(), 3u);
  EXPECT_EQ(state.antagonist.size(), 3u);
  std::set<Edge> all = as_set(state.protagonist);
  for (const Edge& e : state.antagonist) all.insert(e);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_FALSE(replay_defect(state).has_value());
}

TEST(MakerBreaker, HugeBiasEndsInRoundOne) {
  auto maker = make_maker("random", 1);
  auto breaker = make_breaker("random", 2);
  const auto state = play_maker_breaker(6, 15, *maker, *breaker, 10);
  EXPECT_EQ(state.rounds, 1u);
  EXPECT_TRUE(state.exhausted);
  EXPECT_EQ(state.protagonist.size(), 1u);
  EXPECT_EQ(state.antagonist.size(), 14u);
}

TEST(MakerBreaker, SeededGamesRepeat) {
  auto play = [] {
    auto maker = make_maker("random", 7);
    auto breaker = make_breaker("random", 8);
    return play_maker_breaker(40, 5, *maker, *breaker, 60).transcript;
  };
  EXPECT_EQ(play(), play());
}

TEST(MakerBreaker, IllegalMoveIsAFault) {
  StubbornMaker maker;
  auto breaker = make_breaker("passive", 1);
  EXPECT_THROW(play_maker_breaker(5, 1, maker, *breaker, 3), StrategyFault);
}

TEST(RandomMaker, LastFreeEdge) {
  Board board(3);
  board.claim(0, Owner::kAntagonist);
  board.claim(1, Owner::kAntagonist);
  auto maker = random_maker_strategy(1);
  EXPECT_EQ(maker->choose(GameView{board, 1, 1}), 2u);
}

TEST(RandomMaker, FirstMoveIsUniform) {
  const Board board(4);
  std::vector<int> counts(6, 0);
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    auto maker = random_maker_strategy(static_cast<std::uint64_t>(s));
    ++counts[maker->choose(GameView{board, 1, 1})];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - trials / 6.0) * (c - trials / 6.0) / (trials / 6.0);
  EXPECT_LT(chi2, 20.5);  // 5 dof, p ~ 0.001
}

TEST(RandomMaker, SeededMovesRepeat) {
  const Board board(10);
  auto a = random_maker_strategy(3);
  auto b = random_maker_strategy(3);
  for (std::size_t round = 1; round < 20; ++round) EXPECT_EQ(a->choose({board, round, 1}), b->choose({board, round, 1}));
}

TEST(ClientWaiter, OfferEverything) {
  auto waiter = make_waiter("all", 1);
  auto client = make_client("first", 2);
  const auto state = play_client_waiter(4, 5, *waiter, *client);
  EXPECT_EQ(state.protagonist.size(), 1u);
  EXPECT_EQ(state.antagonist.size(), 5u);
}

TEST(ClientWaiter, SingleOffersAreForced) {
  auto waiter = make_waiter("single", 1);
  auto client = make_client("greedy-sparse", 2);
  const auto state = play_client_waiter(6, 3, *waiter, *client);
  EXPECT_EQ(state.protagonist.size(), 15u);
  EXPECT_EQ(state.rounds, 15u);
  EXPECT_TRUE(state.antagonist.empty());
}

TEST(ClientWaiter, OversizedOfferIsAFault) {
  GreedyWaiter waiter;
  auto client = make_client("first", 1);
  EXPECT_THROW(play_client_waiter(5, 2, waiter, *client), StrategyFault);
}

TEST(GameProperty, ReplayQuotasAndCounts) {
  const char* makers[] = {"random", "greedy", "first"};
  const char* breakers[] = {"random", "greedy-degree", "passive", "first"};
  const char* waiters[] = {"random", "greedy-degree", "all", "single"};
  const char* clients[] = {"greedy-sparse", "random", "first"};
  Rng rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng.below(40);
    const std::size_t edges = n * (n - 1) / 2;
    const std::size_t b = 1 + rng.below(n);
    const std::size_t rounds = 1 + rng.below(edges);
    auto maker = make_maker(makers[rng.below(3)], rng.next_u64());
    auto breaker = make_breaker(breakers[rng.below(4)], rng.next_u64());
    const auto mb = play_maker_breaker(n, b, *maker, *breaker, rounds);
    ASSERT_FALSE(replay_defect(mb).has_value()) << *replay_defect(mb);
    if (!mb.exhausted) {
      ASSERT_EQ(mb.protagonist.size(), rounds);
    }
    // Per-round quotas read back from the transcript.
    std::map<std::pair<std::size_t, Actor>, std::size_t> per_round;
    for (const auto& entry : mb.transcript) ++per_round[std::make_pair(entry.round, entry.actor)];
    for (const auto& [key, count] : per_round) ASSERT_LE(count, key.second == Actor::kMaker ? 1u : b);

    const std::string waiter_name = waiters[rng.below(4)];
    auto waiter = make_waiter(waiter_name, rng.next_u64());
    auto client = make_client(clients[rng.below(3)], rng.next_u64());
    const auto cw = play_client_waiter(n, b, *waiter, *client);
    ASSERT_FALSE(replay_defect(cw).has_value()) << *replay_defect(cw);
    ASSERT_EQ(cw.protagonist.size() + cw.antagonist.size(), edges);
    ASSERT_EQ(cw.protagonist.size(), cw.rounds);
    if (waiter_name != "single") {
      ASSERT_GE(cw.protagonist.size(), edges / (b + 1));
    }
  }
}

TEST(Replay, DetectsTampering) {
  auto maker = make_maker("random", 1);
  auto breaker = make_breaker("random", 2);
  auto state = play_maker_breaker(10, 2, *maker, *breaker, 5);
  auto duplicated = state;
  duplicated.transcript[1].edge = duplicated.transcript[0].edge;
  EXPECT_TRUE(replay_defect(duplicated).has_value());
  auto lost = state;
  lost.protagonist.pop_back();
  EXPECT_TRUE(replay_defect(lost).has_value());
}

TEST(Strategies, UnknownNamesAreInputErrors) {
  EXPECT_THROW(make_maker("oracle", 1), InputError);
  EXPECT_THROW(make_breaker("oracle", 1), InputError);
  EXPECT_THROW(make_waiter("oracle", 1), InputError);
  EXPECT_THROW(make_client("oracle", 1), InputError);
}

TEST(MakerPipeline, GreedyBreakerAtTwoThousand) {
  auto breaker = make_breaker("greedy-degree", 0);
  PipelineOptions options;
  options.k_floor = 20;
  const auto report = maker_cycle_pipeline(2000, 0.5, *breaker, 1, options);
  EXPECT_EQ(report.bias, 500u);
  EXPECT_EQ(report.graph_edges, 2500u);
  EXPECT_TRUE(report.theory_vacuous);
  EXPECT_FALSE(replay_defect(report.game).has_value());
  ASSERT_TRUE(report.certificate.has_value()) << report.failure;
  EXPECT_TRUE(report.validated);
}

TEST(MakerPipeline, SmallEpsilonIsVacuous) {
  auto breaker = make_breaker("greedy-degree", 0);
  const auto report = maker_cycle_pipeline(1000, 0.2, *breaker, 1, PipelineOptions{10, 4, 0});
  EXPECT_NEAR(report.theory_delta, std::pow(25.0, -20.0), 1e-40);
  EXPECT_EQ(report.theory_k, 0u);
  EXPECT_TRUE(report.theory_vacuous);
}

TEST(MakerPipeline, PassiveBreakerLeavesARandomGraph) {
  auto breaker = make_breaker("passive", 0);
  const auto report = maker_cycle_pipeline(1000, 0.5, *breaker, 3, PipelineOptions{10, 4, 0});
  EXPECT_EQ(report.graph_edges, 1250u);
  ASSERT_TRUE(report.certificate.has_value()) << report.failure;
  EXPECT_TRUE(report.validated);
}

TEST(ClientPipeline, SingleOffersGiveTheWholeBoard) {
  auto waiter = make_waiter("single", 0);
  auto client = make_client("greedy-sparse", 0);
  const auto report = client_cycle_pipeline(40, 0.5, *waiter, *client, 1, PipelineOptions{4, 4, 0});
  EXPECT_EQ(report.graph_edges, 780u);
  ASSERT_TRUE(report.certificate.has_value()) << report.failure;
  EXPECT_TRUE(report.validated);
}

TEST(ClientPipeline, HugeBiasFailsCleanly) {
  auto waiter = make_waiter("all", 0);
  auto client = make_client("greedy-sparse", 0);
  const std::size_t n = 30;
  // eps near 0 keeps b large relative to n; the Client gets a sparse forest.
  const auto report = client_cycle_pipeline(n, 0.01, *waiter, *client, 1, PipelineOptions{4, 4, 0});
  EXPECT_FALSE(report.certificate.has_value());
  EXPECT_FALSE(report.failure.empty());
}

TEST(ClientPipeline, RandomWaiterEndToEnd) {
  auto waiter = make_waiter("random", 5);
  auto client = make_client("greedy-sparse", 6);
  const auto report = client_cycle_pipeline(2000, 0.5, *waiter, *client, 9, PipelineOptions{20, 4, 0});
  EXPECT_FALSE(replay_defect(report.game).has_value());
  if (report.certificate) {
    EXPECT_TRUE(report.validated);
  } else {
    EXPECT_FALSE(report.failure.empty());
  }
}

}  // namespace
}  // namespace locyc
