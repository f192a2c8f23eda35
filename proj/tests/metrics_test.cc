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

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/llm/agents.hpp"
#include "gamearena/match.hpp"
#include "gamearena/metrics.hpp"
#include "gamearena/report.hpp"
#include "gamearena/rng.hpp"
#include "gamearena/solvers/random_agent.hpp"
#include "gamearena/solvers/tit_for_tat.hpp"
#include "gtest/gtest.h"

namespace gamearena {
namespace {

TEST(NraTest, Examples) {
  EXPECT_EQ(Nra(std::vector<double>(50, 1.0), std::vector<double>(50, 0.0)), 1.0);
  EXPECT_EQ(Nra({30}, {20}), 0.2);
  EXPECT_EQ(Nra({1, 0, 0.5}, {0, 1, 0.5}), 0.0);
  EXPECT_EQ(Nra({0, 0}, {0, 0}), 0.0);
  EXPECT_THROW(Nra({1}, {1, 0}), Error);
}

TEST(NraTest, AntisymmetricAndBounded) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.Below(60);
    std::vector<double> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = static_cast<double>(rng.Below(11));
      b[k] = static_cast<double>(rng.Below(11));
    }
    const double ab = Nra(a, b);
    EXPECT_EQ(ab, -Nra(b, a));
    EXPECT_GE(ab, -1.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(ZeroSumScoreTest, Cases) {
  EXPECT_EQ(ZeroSumScore(GameId::kTicTacToe, WinFor(0), 0), 1.0);
  EXPECT_EQ(ZeroSumScore(GameId::kTicTacToe, WinFor(0), 1), 0.0);
  Outcome draw;
  draw.draw = true;
  EXPECT_EQ(ZeroSumScore(GameId::kTicTacToe, draw, 1), 0.5);
  EXPECT_THROW(ZeroSumScore(GameId::kPrisonersDilemma, draw, 0), Error);
}

TEST(EloTest, Examples) {
  EXPECT_EQ(EloExpected(1500, 1500), std::make_pair(0.5, 0.5));
  auto [ea, eb] = EloExpected(1900, 1500);
  EXPECT_NEAR(ea, 10.0 / 11, 1e-12);
  EXPECT_NEAR(eb, 1.0 / 11, 1e-12);
  auto [fa, fb] = EloExpected(1500, 1900);
  EXPECT_NEAR(fa, 1.0 / 11, 1e-12);
  EXPECT_NEAR(fb, 10.0 / 11, 1e-12);
  EXPECT_EQ(EloUpdate(1500, 1500, 1), std::make_pair(1510.0, 1490.0));
  EXPECT_EQ(EloUpdate(1500, 1500, 0.5), std::make_pair(1500.0, 1500.0));
  EXPECT_EQ(EloUpdate(1500, 1500, 0), std::make_pair(1490.0, 1510.0));
  EXPECT_THROW(EloUpdate(1500, 1500, 0.7), Error);
}

TEST(EloTest, ConservesRatingSum) {
  Rng rng(3);
  double a = kEloInitial;
  double b = kEloInitial;
  for (int i = 0; i < 2000; ++i) {
    const double s = static_cast<double>(rng.Below(3)) / 2;
    const auto [ea, eb] = EloExpected(a, b);
    EXPECT_NEAR(ea + eb, 1.0, 1e-12);
    std::tie(a, b) = EloUpdate(a, b, s);
    EXPECT_NEAR(a + b, 2 * kEloInitial, 1e-9);
  }
}

TEST(EloTest, OrderDependent) {
  auto [a1, b1] = EloUpdate(1500, 1500, 1);
  auto [a2, b2] = EloUpdate(a1, b1, 0);
  auto [c1, d1] = EloUpdate(1500, 1500, 0);
  auto [c2, d2] = EloUpdate(c1, d1, 1);
  EXPECT_NE(a2, c2);
  EXPECT_NEAR(a2 + b2, c2 + d2, 1e-9);
}

// The appendix pseudocode, transcribed line by line.
int AuctionRegretTranscription(int b_1, int b_2, int v) {
  int regret;
  if (b_1 > b_2 + 1) {
    regret = b_1 - (b_2 + 1);
  } else if (b_2 + 1 < v) {
    regret = v - (b_2 + 1);
  } else {
    regret = 0;
  }
  return regret;
}

int IpdRegretTranscription(const std::string& move, const std::string& opponent) {
  int regret = 0;
  if (move == "Testify") {
    regret = 0;
  } else if (move == "Silent" && opponent == "Testify") {
    regret = 1;
  } else if (move == "Silent" && opponent == "Silent") {
    regret = 2;
  }
  return regret;
}

TEST(RegretTest, AuctionExamples) {
  EXPECT_EQ(AuctionRegret(7, 4, 10), 2);
  EXPECT_EQ(AuctionRegret(3, 4, 10), 5);
  EXPECT_EQ(AuctionRegret(3, 4, 4), 0);
}

TEST(RegretTest, AuctionMatchesTranscriptionOnGrid) {
  for (int b1 = 0; b1 <= 10; ++b1) {
    for (int b2 = 0; b2 <= 10; ++b2) {
      for (int v = 0; v <= 10; ++v) {
        const int r = AuctionRegret(b1, b2, v);
        EXPECT_EQ(r, AuctionRegretTranscription(b1, b2, v)) << b1 << " " << b2 << " " << v;
        EXPECT_GE(r, 0);
      }
    }
  }
}

TEST(RegretTest, IpdTable) {
  EXPECT_EQ(IpdRegret("<Testify>", "<Silent>"), 0);
  EXPECT_EQ(IpdRegret("<Testify>", "<Testify>"), 0);
  EXPECT_EQ(IpdRegret("<Silent>", "<Testify>"), 1);
  EXPECT_EQ(IpdRegret("<Silent>", "<Silent>"), 2);
  for (const char* a : {"Testify", "Silent"}) {
    for (const char* b : {"Testify", "Silent"}) {
      EXPECT_EQ(IpdRegret(a, b), IpdRegretTranscription(a, b));
    }
  }
  EXPECT_THROW(IpdRegret("<Cooperate>", "<Silent>"), Error);
}

TEST(RegretTest, IpdMatchRegretAccumulates) {
  TitForTatAgent a;
  TitForTatAgent b("tft2");
  auto rec = RunMatch(GameId::kPrisonersDilemma, {&a, &b}, 0);
  auto rounds = RecordRegrets(rec);
  ASSERT_EQ(rounds.size(), 5u);
  int total = 0;
  for (const auto& r : rounds) total += r.regret[0];
  EXPECT_EQ(total, 10);
}

TEST(RegretTest, AuctionFromRecord) {
  ConstantAgent a("<7>", "seven");
  ConstantAgent b("<4>", "four");
  // Find a seed with both valuations high enough for these bids.
  for (std::uint64_t seed = 0;; ++seed) {
    GameState s = NewMatch(GameId::kBlindAuction, seed);
    const auto& pos = s.As<games::BlindAuction>();
    if (pos.valuations[0] < 7 || pos.valuations[1] < 4) continue;
    auto rec = RunMatch(GameId::kBlindAuction, {&a, &b}, seed);
    auto r = RecordRegrets(rec);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].regret[0], AuctionRegret(7, 4, pos.valuations[0]));
    EXPECT_EQ(r[0].regret[1], AuctionRegret(4, 7, pos.valuations[1]));
    break;
  }
}

TEST(SystemRewardTest, IpdJointActions) {
  using games::PrisonersDilemma;
  double best = -1;
  std::array<bool, 2> arg{};
  for (bool t0 : {false, true}) {
    for (bool t1 : {false, true}) {
      const double s = SystemReward({static_cast<double>(PrisonersDilemma::Payoff(t0, t1)),
                                     static_cast<double>(PrisonersDilemma::Payoff(t1, t0))});
      if (s > best) {
        best = s;
        arg = {t0, t1};
      }
    }
  }
  EXPECT_EQ(best, 4);
  EXPECT_EQ(arg, (std::array<bool, 2>{false, false}));
  EXPECT_EQ(SystemReward({1, 1}), 2);
  EXPECT_EQ(SystemReward({6, 7}), 13);
}

TEST(SystemRewardTest, SeriesEqualsRoundSums) {
  TitForTatAgent tft;
  ConstantAgent defect("<Testify>", "testify");
  auto rec = RunMatch(GameId::kPrisonersDilemma, {&tft, &defect}, 0);
  auto series = RecordSystemRewards(rec);
  ASSERT_EQ(series.size(), 5u);
  // Round 1: Silent vs Testify gives 0 + 3; then mutual testimony 1 + 1.
  EXPECT_EQ(series[0].payoffs, (std::array<double, 2>{0, 3}));
  EXPECT_EQ(series[0].system, 3);
  double total0 = 0;
  double total1 = 0;
  for (std::size_t r = 1; r < 5; ++r) {
    EXPECT_EQ(series[r].system, 2);
    EXPECT_EQ(series[r].system, series[r].payoffs[0] + series[r].payoffs[1]);
  }
  for (const auto& r : series) {
    total0 += r.payoffs[0];
    total1 += r.payoffs[1];
  }
  EXPECT_EQ(total0, rec.outcome->returns[0]);
  EXPECT_EQ(total1, rec.outcome->returns[1]);
}

std::shared_ptr<ScriptedClient> Script(std::vector<std::string> lines) {
  return std::make_shared<ScriptedClient>(std::move(lines));
}

TEST(ParetoTest, ScriptedAgreement) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GameState s = NewMatch(GameId::kNegotiation, seed);
    const auto& pos = s.As<games::Negotiation>();
    // Seat 0 asks for everything of the first item type and nothing else.
    const std::array<int, 3> take = {pos.pool[0], 0, 0};
    const std::string proposal = "<Proposal: [" + std::to_string(take[0]) + ", 0, 0]>";
    LlmAgent a("a", Script({proposal, "<Utterance: [0, 0, 0]>"}), {});
    LlmAgent b("b", Script({"<Agree>"}), {});
    auto rec = RunMatch(GameId::kNegotiation, {&a, &b}, seed);
    ASSERT_TRUE(rec.valid) << rec.invalid_cause.value_or("");
    auto point = RecordParetoPoint(rec);
    ASSERT_TRUE(point);
    const int x = pos.values[0][0] * take[0];
    const int y = pos.values[1][1] * pos.pool[1] + pos.values[1][2] * pos.pool[2];
    EXPECT_EQ(point->x, x);
    EXPECT_EQ(point->y, y);
    EXPECT_EQ(rec.outcome->returns, (std::array<double, 2>{double(x), double(y)}));
  }
}

TEST(ParetoTest, NoDealIsNotAPoint) {
  const GameState s = NewMatch(GameId::kNegotiation, 1);
  std::vector<std::string> a_script, b_script;
  for (int t = 0; t < 5; ++t) {
    a_script.push_back("<Proposal: [0, 0, 0]>");
    a_script.push_back("<Utterance: [0, 0, 0]>");
    b_script.push_back("<Proposal: [0, 0, 0]>");
    b_script.push_back("<Utterance: [0, 0, 0]>");
  }
  LlmAgent a("a", Script(a_script), {});
  LlmAgent b("b", Script(b_script), {});
  auto rec = RunMatch(GameId::kNegotiation, {&a, &b}, 1);
  ASSERT_TRUE(rec.valid) << rec.invalid_cause.value_or("");
  EXPECT_FALSE(RecordParetoPoint(rec));
  EXPECT_EQ(rec.outcome->returns, (std::array<double, 2>{0, 0}));
  MatchRecord wrong = rec;
  wrong.game = "tictactoe";
  EXPECT_THROW(RecordParetoPoint(wrong), Error);
}

// Hand-built records: agent a wins the first `a_wins` matches.
std::vector<MatchRecord> FakeCompetition(const std::string& id, GameId game,
                                         const std::string& a, const std::string& b,
                                         int n, int a_wins) {
  std::vector<MatchRecord> out;
  for (int i = 0; i < n; ++i) {
    MatchRecord r;
    r.game = std::string(GameName(game));
    r.seed = static_cast<std::uint64_t>(i);
    const bool a_first = i % 2 == 0;
    r.agents = a_first ? std::array<std::string, 2>{a, b} : std::array<std::string, 2>{b, a};
    const int a_seat = a_first ? 0 : 1;
    r.outcome = WinFor(i < a_wins ? a_seat : Opponent(a_seat));
    r.valid = true;
    r.competition = id;
    r.index = i;
    out.push_back(r);
  }
  return out;
}

TEST(ReportTest, NraMatrixAndOrdering) {
  Manifest m;
  m.competitions = {{"c1", GameId::kNim, {"x", "common"}, 10},
                    {"c2", GameId::kTicTacToe, {"y", "common"}, 10},
                    {"c3", GameId::kNim, {"y", "common"}, 10}};
  std::vector<MatchRecord> records;
  for (auto& r : FakeCompetition("c1", GameId::kNim, "x", "common", 10, 6)) records.push_back(r);
  for (auto& r : FakeCompetition("c2", GameId::kTicTacToe, "y", "common", 10, 8)) {
    records.push_back(r);
  }
  for (auto& r : FakeCompetition("c3", GameId::kNim, "y", "common", 10, 4)) records.push_back(r);
  const Report rep = BuildReport(m, records);
  EXPECT_DOUBLE_EQ(rep.nra.at("x").at(GameId::kNim), 0.2);
  EXPECT_DOUBLE_EQ(rep.nra.at("y").at(GameId::kNim), -0.2);
  EXPECT_DOUBLE_EQ(rep.nra.at("y").at(GameId::kTicTacToe), 0.6);
  EXPECT_DOUBLE_EQ(rep.avg_nra.at("y"), 0.2);
  EXPECT_DOUBLE_EQ(rep.avg_nra.at("x"), 0.2);
  // Equal averages fall back to agent id.
  EXPECT_EQ(rep.File("nra_matrix.csv"),
            "agent,tictactoe,nim,avg\n"
            "x,,0.200000,0.200000\n"
            "y,0.600000,-0.200000,0.200000\n"
            "common,-0.600000,0.000000,-0.300000\n");
}

TEST(ReportTest, IncompleteCompetitionLeavesEmptyCell) {
  Manifest m;
  m.competitions = {{"c1", GameId::kNim, {"x", "z"}, 50}};
  auto rep = BuildReport(m, FakeCompetition("c1", GameId::kNim, "x", "z", 10, 10));
  EXPECT_EQ(rep.File("nra_matrix.csv"), "agent,nim,avg\nx,,\nz,,\n");
  EXPECT_NE(rep.File("completion.csv").find("c1,nim,x,z,10,10,1.000000,no"),
            std::string::npos);
}

TEST(ReportTest, EloFoldsChronologically) {
  Manifest m;
  m.competitions = {{"c1", GameId::kNim, {"x", "z"}, 2}};
  auto records = FakeCompetition("c1", GameId::kNim, "x", "z", 2, 1);
  // Shuffle the input order; the fold must follow the match index.
  std::swap(records[0], records[1]);
  auto rep = BuildReport(m, records);
  auto [x1, z1] = EloUpdate(1500, 1500, 1);
  auto [z2, x2] = EloUpdate(z1, x1, 1);
  EXPECT_EQ(rep.elo.at(GameId::kNim).at("x"), x2);
  EXPECT_EQ(rep.elo.at(GameId::kNim).at("z"), z2);
}

TEST(ReportTest, ManifestRoundTrip) {
  Manifest m;
  m.competitions = {{"c1", GameId::kPig, {"a", "b"}, 50}};
  EXPECT_EQ(ManifestFromJson(ToJson(m)), m);
  Json bad = ToJson(m);
  bad["schema"] = 99;
  EXPECT_THROW(ManifestFromJson(bad), Error);
}

}  // namespace
}  // namespace gamearena
