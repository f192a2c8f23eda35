// Copyright 2026 The gamearena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/solvers/kuhn_equilibrium.hpp"
#include "gamearena/solvers/mcts.hpp"
#include "gamearena/solvers/oracle.hpp"
#include "gamearena/solvers/random_agent.hpp"
#include "gamearena/solvers/tit_for_tat.hpp"
#include "gtest/gtest.h"

namespace gamearena {
namespace {

using games::ConnectFour;
using games::KuhnPoker;
using games::LiarsDice;
using games::Nim;
using games::Pig;

GameState Play(GameState state, const std::vector<std::string>& moves) {
  for (const auto& m : moves) state = Apply(state, *ParseSurface(state.game(), m));
  return state;
}

TEST(RandomActTest, SingleLegalActionIsForced) {
  GameState s = Play(NewMatch(GameId::kLiarsDice, 0), {"<2 dices, 6 value>"});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(RandomAct(s, 1, seed).surface, "<Liar>");
  }
}

TEST(RandomActTest, UniformOverTicTacToeCells) {
  GameState s = NewMatch(GameId::kTicTacToe, 0);
  Rng rng(7);
  std::map<std::string, int> counts;
  const int n = 90000;
  for (int i = 0; i < n; ++i) ++counts[RandomAct(s, 0, rng).surface];
  ASSERT_EQ(counts.size(), 9u);
  double chi2 = 0;
  for (const auto& [surface, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / n, 1.0 / 9, 0.01) << surface;
    chi2 += std::pow(c - n / 9.0, 2) / (n / 9.0);
  }
  // 8 degrees of freedom, 99.9th percentile.
  EXPECT_LT(chi2, 26.12);
}

TEST(RandomActTest, TerminalStateIsRejected) {
  GameState s = Play(NewMatch(GameId::kTicTacToe, 0),
                     {"<C1R1>", "<C1R2>", "<C2R1>", "<C2R2>", "<C3R1>"});
  EXPECT_THROW(RandomAct(s, 0, 1), StateError);
}

TEST(TitForTatTest, MirrorsPreviousOpponentAction) {
  History h;
  EXPECT_EQ(TitForTatAct(h, 0).surface, "<Silent>");
  h.push_back({0, "<Silent>"});
  h.push_back({1, "<Testify>"});
  EXPECT_EQ(TitForTatAct(h, 0).surface, "<Testify>");
  EXPECT_EQ(TitForTatAct(h, 1).surface, "<Silent>");
  EXPECT_EQ(TitForTatAct(h, 0), TitForTatAct(h, 0));
}

TEST(TitForTatTest, AgainstAlwaysSilent) {
  TitForTatAgent tft;
  ConstantAgent silent("<Silent>", "silent");
  GameState s = NewMatch(GameId::kPrisonersDilemma, 0);
  while (!s.IsTerminal()) {
    auto a0 = tft.Act(s, 0);
    EXPECT_EQ(a0.action->surface, "<Silent>");
    s = ApplyJoint(s, *a0.action, *silent.Act(s, 1).action);
  }
}

TEST(TitForTatTest, RejectsOtherGames) {
  TitForTatAgent tft;
  EXPECT_THROW(tft.Act(NewMatch(GameId::kTicTacToe, 0), 0), Error);
}

TEST(MctsTest, RootVisitsSumToBudget) {
  for (GameId game : {GameId::kTicTacToe, GameId::kKuhnPoker,
                      GameId::kBlindAuction, GameId::kPig}) {
    GameState s = NewMatch(game, 3);
    MctsConfig config;
    config.num_simulations = 333;
    config.determinizations = 7;
    Rng rng(5);
    auto result = MctsSearch(s, 0, config, rng);
    int total = 0;
    for (const auto& [surface, v] : result.root_visits) total += v;
    EXPECT_EQ(total, 333) << GameName(game);
    EXPECT_TRUE(IsLegal(s, 0, result.action));
  }
}

TEST(MctsTest, SingleSimulationReturnsLegalAction) {
  MctsConfig config;
  config.num_simulations = 1;
  for (GameId game : kAllGames) {
    GameState s = NewMatch(game, 11);
    const int p = s.IsSimultaneous() ? 1 : s.CurrentPlayer();
    EXPECT_TRUE(IsLegal(s, p, MctsAct(s, p, config, 1))) << GameName(game);
  }
}

TEST(MctsTest, SameSeedSameAction) {
  GameState s = NewMatch(GameId::kConnectFour, 0);
  MctsConfig config;
  config.num_simulations = 200;
  EXPECT_EQ(MctsAct(s, 0, config, 42), MctsAct(s, 0, config, 42));
}

TEST(MctsTest, BlocksImmediateThreat) {
  // X holds C1R1 and C2R1; O must take C3R1.
  GameState s = Play(NewMatch(GameId::kTicTacToe, 0), {"<C1R1>", "<C2R2>", "<C2R1>"});
  auto oracle = OracleSolve(s);
  ASSERT_EQ(oracle.optimal_actions.size(), 1u);
  ASSERT_EQ(oracle.optimal_actions[0].surface, "<C3R1>");
  int blocks = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (MctsAct(s, 1, MctsConfig{}, seed).surface == "<C3R1>") ++blocks;
  }
  EXPECT_GE(blocks, 95);
}

TEST(MctsTest, NimEndgame) {
  GameState s = GameState::From<Nim>(Nim::WithPiles({0, 0, 0, 2}), 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(MctsAct(s, 0, MctsConfig{}, seed).surface, "<pile:4, take:1>");
  }
}

TEST(MctsTest, InvalidConfigIsRejected) {
  GameState s = NewMatch(GameId::kNim, 0);
  MctsConfig config;
  config.num_simulations = 0;
  EXPECT_THROW(MctsAct(s, 0, config, 0), Error);
  config.num_simulations = 10;
  config.exploration_constant = 0;
  EXPECT_THROW(MctsAct(s, 0, config, 0), Error);
}

TEST(OracleTest, TicTacToeIsADraw) {
  auto r = OracleSolve(NewMatch(GameId::kTicTacToe, 0));
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.optimal_actions.size(), 9u);
}

TEST(OracleTest, MisereNimStartIsLostForMover) {
  EXPECT_EQ(OracleSolve(NewMatch(GameId::kNim, 0)).value, -1.0);
}

// Misère Nim theory: the mover wins iff (xor != 0) when some pile exceeds 1,
// and iff the number of non-empty piles is even otherwise.
TEST(OracleTest, NimMatchesMisereTheory) {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 4; ++c) {
        for (int d = 0; d <= 5; ++d) {
          if (a + b + c + d == 0) continue;
          std::array<int, 4> piles{a, b, c, d};
          const int x = a ^ b ^ c ^ d;
          const bool big = std::any_of(piles.begin(), piles.end(),
                                       [](int p) { return p > 1; });
          const int ones = std::count(piles.begin(), piles.end(), 1);
          const bool wins = big ? x != 0 : ones % 2 == 0;
          GameState s = GameState::From<Nim>(Nim::WithPiles(piles), 0);
          EXPECT_EQ(OracleSolve(s).value, wins ? 1.0 : -1.0)
              << a << b << c << d;
        }
      }
    }
  }
}

TEST(OracleTest, AntisymmetricUnderPerspectiveSwap) {
  // The same board with the other side to move has the negated value once
  // colours are swapped.
  GameState s = Play(NewMatch(GameId::kTicTacToe, 0), {"<C1R1>", "<C2R2>", "<C3R3>"});
  auto pos = s.As<games::TicTacToe>();
  auto swapped = pos;
  for (int& c : swapped.cells) {
    if (c >= 0) c = Opponent(c);
  }
  swapped.to_move = Opponent(pos.to_move);
  const double v = OracleSolve(s).value;
  EXPECT_EQ(OracleSolve(GameState::From<games::TicTacToe>(swapped, 0)).value, v);
  // Child values seen from the opponent negate the parent's best.
  double best = -2;
  for (const auto& a : LegalActions(s, 1)) {
    GameState child = Apply(s, a);
    if (child.IsTerminal()) continue;
    best = std::max(best, -OracleSolve(child).value);
  }
  EXPECT_EQ(best, v);
}

TEST(OracleTest, ConnectFourLatePositionsTakeImmediateWins) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 5 && seed < 500; ++seed) {
    Rng rng(seed);
    GameState s = NewMatch(GameId::kConnectFour, 0);
    while (!s.IsTerminal() && s.As<ConnectFour>().discs < 28) {
      s = Apply(s, RandomAct(s, s.CurrentPlayer(), rng));
    }
    if (s.IsTerminal()) continue;
    const int p = s.CurrentPlayer();
    std::vector<std::string> wins;
    for (const auto& a : LegalActions(s, p)) {
      GameState child = Apply(s, a);
      if (child.IsTerminal() && GetOutcome(child).winner == p) wins.push_back(a.surface);
    }
    if (wins.empty()) continue;
    ++checked;
    auto r = OracleSolve(s);
    EXPECT_EQ(r.value, 1.0);
    for (const auto& w : wins) {
      EXPECT_TRUE(std::any_of(r.optimal_actions.begin(), r.optimal_actions.end(),
                              [&](const auto& a) { return a.surface == w; }));
    }
  }
  EXPECT_EQ(checked, 5);
}

TEST(OracleTest, ConnectFourValueIsConsistentWithChildren) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 5 && seed < 500; ++seed) {
    Rng rng(seed);
    GameState s = NewMatch(GameId::kConnectFour, 0);
    while (s.As<ConnectFour>().discs < 24 && !s.IsTerminal()) {
      s = Apply(s, RandomAct(s, s.CurrentPlayer(), rng));
    }
    if (s.IsTerminal()) continue;
    ++checked;
    const int p = s.CurrentPlayer();
    double best = -2;
    for (const auto& a : LegalActions(s, p)) {
      GameState child = Apply(s, a);
      const double v = child.IsTerminal() ? GetOutcome(child).returns[p]
                                          : -OracleSolve(child).value;
      best = std::max(best, v);
    }
    EXPECT_EQ(OracleSolve(s).value, best) << "seed " << seed;
  }
  EXPECT_EQ(checked, 5);
}

TEST(OracleTest, ConnectFourBudgetIsEnforced) {
  OracleOptions options;
  options.node_budget = 1000;
  EXPECT_THROW(OracleSolve(NewMatch(GameId::kConnectFour, 0), options),
               OracleBudgetError);
}

TEST(OracleTest, LiarsDiceKnownDice) {
  LiarsDice::Position pos;
  pos.dice = {4, 4};
  // The mover can bid two fours, which is true and cannot be raised.
  auto r = OracleSolve(GameState::From<LiarsDice>(pos, 0));
  EXPECT_EQ(r.value, 1.0);
  std::vector<std::string> optimal;
  for (const auto& a : r.optimal_actions) optimal.push_back(a.surface);
  EXPECT_NE(std::find(optimal.begin(), optimal.end(), "<2 dices, 4 value>"),
            optimal.end());
  pos.dice = {2, 5};
  GameState s = Play(GameState::From<LiarsDice>(pos, 0), {"<1 dices, 5 value>"});
  // A true standing bid: challenging loses; any raise can be challenged.
  EXPECT_EQ(OracleSolve(s).value, -1.0);
}

TEST(OracleTest, PigBankingAtTargetWins) {
  GameState s = GameState::From<Pig>(Pig::With({95, 40}, 6, 0), 0);
  auto r = OracleSolve(s);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.best_action->surface, "<stop>");
}

TEST(OracleTest, PigRollsWhenBehindWithNothingBanked) {
  GameState s = GameState::From<Pig>(Pig::With({10, 90}, 0, 0), 0);
  EXPECT_EQ(OracleSolve(s).best_action->surface, "<roll>");
}

TEST(KuhnTest, NormalFormValueIsMinusOneEighteenth) {
  auto eq = kuhn::SolveNormalForm();
  EXPECT_EQ(eq.value, kuhn::Rational(-1, 18));
  EXPECT_EQ(std::accumulate(eq.player0_mix.begin(), eq.player0_mix.end(),
                            kuhn::Rational(0)),
            1);
  EXPECT_EQ(std::accumulate(eq.player1_mix.begin(), eq.player1_mix.end(),
                            kuhn::Rational(0)),
            1);
  EXPECT_EQ(kuhn::MixedValue(eq.player0_mix, eq.player1_mix), eq.value);
}

// Both mixes are exact best-response safe: no pure deviation helps.
TEST(KuhnTest, EquilibriumHasNoProfitableDeviation) {
  auto eq = kuhn::SolveNormalForm();
  for (int s = 0; s < kuhn::kPureStrategies; ++s) {
    std::vector<kuhn::Rational> pure(kuhn::kPureStrategies, 0);
    pure[s] = 1;
    EXPECT_GE(kuhn::MixedValue(eq.player0_mix, pure), eq.value);
    EXPECT_LE(kuhn::MixedValue(pure, eq.player1_mix), eq.value);
  }
}

TEST(KuhnTest, CfrAgreesWithLinearProgram) {
  kuhn::Cfr cfr;
  const double value = cfr.Run(20000);
  EXPECT_NEAR(value, -1.0 / 18, 2e-3);
  // Known equilibrium structure: never bet a queen at the opening, always
  // call a bet with a king.
  EXPECT_LT(cfr.AverageBet("Q"), 0.05);
  EXPECT_GT(cfr.AverageBet("Kb"), 0.95);
}

TEST(KuhnTest, OracleReportsValueAtOpening) {
  GameState s = GameState::From<KuhnPoker>(KuhnPoker::WithCards({1, 2}), 0);
  auto r = OracleSolve(s);
  EXPECT_NEAR(r.value, -1.0 / 18, 1e-12);
  EXPECT_EQ(r.best_action->surface, "<Pass>");
  EXPECT_THROW(OracleSolve(Play(s, {"<Pass>"})), Error);
}

}  // namespace
}  // namespace gamearena
