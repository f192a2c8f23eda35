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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/prompt_goldens.hpp"
#include "gamearena/prompts.hpp"
#include "gamearena/rng.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

namespace gamearena {
namespace {

using Json = nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << path;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Json& Fixtures() {
  static const Json j =
      Json::parse(ReadFile(std::string(GAMEARENA_PROMPT_DIR) + "/golden/fixtures.json"));
  return j;
}

ObservationView FixtureView(const Json& f) {
  ObservationView v;
  for (const auto& [k, val] : f.at("variables").items()) {
    v.variables[k] = val.get<std::string>();
  }
  return v;
}

TEST(PromptGoldenTest, EveryGameAndStyleMatchesGolden) {
  const auto choices = Fixtures().at("_choices").get<std::vector<std::string>>();
  int checked = 0;
  for (const auto& [key, f] : Fixtures().items()) {
    if (key.front() == '_') continue;
    const GameId game = ParseGameId(f.at("game").get<std::string>());
    const ObservationView view = FixtureView(f);
    for (ReasoningStyle style : kAllStyles) {
      PromptBundle b = style == ReasoningStyle::kTotVote
                           ? ComposeVote(game, view, choices)
                           : Compose(game, view, style);
      const std::string golden =
          ReadFile(std::string(GAMEARENA_PROMPT_DIR) + "/golden/" + key + "__" +
                   std::string(StyleName(style)) + ".txt");
      EXPECT_EQ(b.Text() + "\n", golden) << key << " " << StyleName(style);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 11 * 5);
}

// Fixtures that carry a move list must equal the engine's observation of the
// state those moves reach.
TEST(PromptGoldenTest, FixturesMatchLiveObservations) {
  int checked = 0;
  for (const auto& [key, f] : Fixtures().items()) {
    if (key.front() == '_' || !f.contains("player")) continue;
    const GameId game = ParseGameId(f.at("game").get<std::string>());
    GameState s = NewMatch(game, 0);
    if (f.contains("moves")) {
      for (const auto& m : f["moves"]) {
        s = Apply(s, *ParseSurface(game, m.get<std::string>()));
      }
    }
    if (f.contains("joint")) {
      for (const auto& pair : f["joint"]) {
        s = ApplyJoint(s, *ParseSurface(game, pair[0].get<std::string>()),
                       *ParseSurface(game, pair[1].get<std::string>()));
      }
    }
    const auto live = Observe(s, f.at("player").get<int>()).variables;
    for (const auto& [k, v] : FixtureView(f).variables) {
      ASSERT_TRUE(live.count(k)) << key << " " << k;
      EXPECT_EQ(live.at(k), v) << key << " " << k;
    }
    ++checked;
  }
  EXPECT_EQ(checked, 5);
}

TEST(PromptGoldenTest, CheckerFlagsTamperedGoldens) {
  namespace fs = std::filesystem;
  const fs::path src = fs::path(GAMEARENA_PROMPT_DIR) / "golden";
  EXPECT_TRUE(CheckPromptGoldens(src).ok());
  const fs::path copy = fs::temp_directory_path() / "gamearena_goldens";
  fs::remove_all(copy);
  fs::copy(src, copy);
  {
    std::ofstream out(copy / "nim__cot.txt", std::ios::app);
    out << " ";
  }
  fs::remove(copy / "pig__prompt.txt");
  auto check = CheckPromptGoldens(copy);
  EXPECT_EQ(check.checked, 55);
  EXPECT_EQ(check.mismatches,
            (std::vector<std::string>{"nim__cot.txt", "pig__prompt.txt"}));
  fs::remove_all(copy);
}

TEST(PromptTest, BlindAuctionBudgetSentence) {
  ObservationView v;
  v.variables = {{"valuation", "7"}, {"legal_moves", "<0>"}};
  auto b = Compose(GameId::kBlindAuction, v, ReasoningStyle::kPrompt);
  EXPECT_NE(b.observation.find("your budget is 7. Your bid must be strictly lower "
                               "than or equal to 7"),
            std::string::npos);
}

TEST(PromptTest, CotHasThoughtAndActionBlocks) {
  for (GameId game : kAllGames) {
    GameState s = NewMatch(game, 1);
    const int p = s.IsSimultaneous() ? 0 : s.CurrentPlayer();
    auto b = Compose(game, Observe(s, p), ReasoningStyle::kCot);
    EXPECT_NE(b.reasoning.find("Thought:"), std::string::npos);
    EXPECT_NE(b.reasoning.find("Action:"), std::string::npos);
    ASSERT_EQ(b.assembled.size(), 2u);
    EXPECT_EQ(b.assembled[0].role, "system");
    EXPECT_EQ(b.assembled[1].content,
              b.head + "\n\n" + b.observation + "\n\n" + b.reasoning);
  }
}

TEST(PromptTest, MissingVariableIsReported) {
  try {
    Compose(GameId::kTicTacToe, ObservationView{}, ReasoningStyle::kPrompt);
    FAIL() << "expected MissingVariableError";
  } catch (const MissingVariableError& e) {
    EXPECT_NE(std::string(e.what()).find("self_moves"), std::string::npos);
  }
}

TEST(PromptTest, ComposeIsPure) {
  GameState s = NewMatch(GameId::kNegotiation, 4);
  auto v = Observe(s, 0);
  EXPECT_EQ(Compose(GameId::kNegotiation, v, ReasoningStyle::kCot).Text(),
            Compose(GameId::kNegotiation, v, ReasoningStyle::kCot).Text());
}

TEST(PromptTest, CotVariantsAreSelectable) {
  GameState s = NewMatch(GameId::kPig, 0);
  for (int i = 0; i < 5; ++i) {
    auto b = Compose(GameId::kPig, Observe(s, 0), ReasoningStyle::kCot,
                     "reasoning/cot_variant_" + std::to_string(i));
    EXPECT_NE(b.reasoning.find("Action:"), std::string::npos);
    EXPECT_NE(b.reasoning, PromptAsset("reasoning/cot"));
  }
}

TEST(ParseActionTest, CotActionBlock) {
  GameState s = NewMatch(GameId::kTicTacToe, 0);
  auto r = ParseAction("Thought: the corner is weak.\nAction: <C1R2>", s, 0);
  EXPECT_EQ(r.status, ParseStatus::kOk);
  const auto& m = std::get<games::TicTacToe::Move>(r.action->parsed);
  EXPECT_EQ(m.col, 1);
  EXPECT_EQ(m.row, 2);
}

TEST(ParseActionTest, LastMatchWins) {
  GameState s = NewMatch(GameId::kPig, 0);
  auto r = ParseAction("Thought: <roll> is risky.\nAction:\n<stop>", s, 0);
  EXPECT_EQ(r.surface, "<stop>");
  r = ParseAction("Thought: I will <roll>.\nAction:\nroll", s, 0);
  EXPECT_EQ(r.surface, "<roll>");
}

TEST(ParseActionTest, IllegalNimTake) {
  GameState s = NewMatch(GameId::kNim, 0);  // pile 3 holds 5
  s = Apply(s, *ParseSurface(GameId::kNim, "<pile:3, take:3>"));
  auto r = ParseAction("I will take <pile:3, take:4>", s, 1);
  EXPECT_EQ(r.status, ParseStatus::kIllegal);
  EXPECT_EQ(r.surface, "<pile:3, take:4>");
}

TEST(ParseActionTest, NoBracketedToken) {
  GameState s = NewMatch(GameId::kKuhnPoker, 0);
  EXPECT_EQ(ParseAction("Thought: I should bet.", s, 0).status,
            ParseStatus::kNoActionFound);
}

TEST(ParseActionTest, KeywordsAreCaseInsensitive) {
  GameState s = NewMatch(GameId::kKuhnPoker, 0);
  auto r = ParseAction("Action: < bet >", s, 0);
  EXPECT_EQ(r.status, ParseStatus::kOk);
  EXPECT_EQ(r.surface, "<Bet>");
  GameState ipd = NewMatch(GameId::kPrisonersDilemma, 0);
  EXPECT_EQ(ParseAction("<SILENT>", ipd, 1).surface, "<Silent>");
}

TEST(ParseActionTest, CoordinatesAreExact) {
  GameState s = NewMatch(GameId::kTicTacToe, 0);
  EXPECT_EQ(ParseAction("<c1r2>", s, 0).status, ParseStatus::kNoActionFound);
  EXPECT_EQ(ParseAction("<C4R1>", s, 0).status, ParseStatus::kMalformed);
}

TEST(ParseActionTest, NegotiationBareAgree) {
  using games::Negotiation;
  GameState s = GameState::From<Negotiation>(
      Negotiation::WithSetup({1, 2, 2}, {{{2, 2, 2}, {0, 3, 2}}}), 0);
  s = Apply(s, *ParseSurface(GameId::kNegotiation, "<Proposal: [1, 0, 2]>"));
  s = Apply(s, *ParseSurface(GameId::kNegotiation, "<Utterance: [1, 1, 1]>"));
  EXPECT_EQ(ParseAction("I think we should Agree.", s, 1).surface, "<Agree>");
  EXPECT_EQ(ParseAction("Agree? no. <proposal: [0,2, 2]>", s, 1).surface,
            "<Proposal: [0, 2, 2]>");
  EXPECT_EQ(ParseAction("disagreeable", s, 1).status, ParseStatus::kNoActionFound);
}

TEST(ParseActionTest, BreakthroughCaptureStarIsRestored) {
  GameState s = NewMatch(GameId::kBreakthrough, 0);
  for (const char* m : {"<b2->b3>", "<b7->b6>", "<b3->b4>", "<b6->b5>", "<a2->a3>",
                        "<a7->a6>", "<a3->a4>"}) {
    s = Apply(s, *ParseSurface(GameId::kBreakthrough, m));
  }
  auto r = ParseAction("Action: <b5->a4>", s, 1);
  EXPECT_EQ(r.status, ParseStatus::kOk);
  EXPECT_EQ(r.surface, "<b5->a4*>");
}

// parse(render(a)) is ok for every legal action on random reachable states.
class RoundTripTest : public ::testing::TestWithParam<GameId> {};

TEST_P(RoundTripTest, RenderedActionsParseBack) {
  const GameId game = GetParam();
  int states = 0;
  for (std::uint64_t seed = 0; states < 100; ++seed) {
    Rng rng(seed);
    GameState s = NewMatch(game, seed);
    const int depth = static_cast<int>(rng.Below(12));
    for (int i = 0; i < depth && !s.IsTerminal(); ++i) {
      if (s.IsSimultaneous()) {
        auto a0 = LegalActions(s, 0);
        auto a1 = LegalActions(s, 1);
        s = ApplyJoint(s, a0[rng.Below(a0.size())], a1[rng.Below(a1.size())]);
      } else {
        auto a = LegalActions(s, s.CurrentPlayer());
        s = Apply(s, a[rng.Below(a.size())]);
      }
    }
    if (s.IsTerminal()) continue;
    ++states;
    const int p = s.IsSimultaneous() ? static_cast<int>(seed % 2) : s.CurrentPlayer();
    for (const auto& a : LegalActions(s, p)) {
      auto r = ParseAction("Thought: fine.\n\nAction:\n" + a.surface, s, p);
      ASSERT_EQ(r.status, ParseStatus::kOk) << a.surface;
      EXPECT_EQ(r.action->surface, a.surface);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Games, RoundTripTest, ::testing::ValuesIn(kAllGames),
                         [](const auto& info) { return std::string(GameName(info.param)); });

TEST(MajorityVoteTest, Examples) {
  auto t = [](const char* s) { return *ParseSurface(GameId::kPig, s); };
  auto a = t("<roll>");
  auto b = t("<stop>");
  EXPECT_EQ(MajorityVote({a, a, b, a, b}), a);
  EXPECT_EQ(MajorityVote({b, b, a, a}), b);
  EXPECT_EQ(MajorityVote({a, a, b, b}), a);
  EXPECT_EQ(MajorityVote({b}), b);
  EXPECT_THROW(MajorityVote({}), Error);
}

TEST(CompletionRateTest, Formula) {
  EXPECT_DOUBLE_EQ(CompletionRate(50, 50), 1.0);
  EXPECT_NEAR(CompletionRate(50, 55), 0.909090909, 1e-9);
  EXPECT_THROW(CompletionRate(0, 0), Error);
}

}  // namespace
}  // namespace gamearena
