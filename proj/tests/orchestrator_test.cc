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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gamearena/orchestrator/config.hpp"
#include "gamearena/orchestrator/tournament.hpp"
#include "gamearena/report.hpp"
#include "gtest/gtest.h"

namespace gamearena {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("gamearena_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AgentSpec Spec(const std::string& id, AgentKind kind) {
  AgentSpec s;
  s.id = id;
  s.kind = kind;
  return s;
}

AgentSpec MockLlm(const std::string& id, double bad_rate) {
  AgentSpec s = Spec(id, AgentKind::kLlm);
  s.client = ClientKind::kMock;
  s.reasoning.style = AgentStyle::kCot;
  s.bad_match_rate = bad_rate;
  return s;
}

CompetitionConfig Competition(GameId game, const std::string& a, const std::string& b,
                              int target = 50, std::uint64_t seed = 1) {
  CompetitionConfig c;
  c.game = game;
  c.agent_a = a;
  c.agent_b = b;
  c.id = DefaultCompetitionId(game, a, b);
  c.valid_matches_target = target;
  c.base_seed = seed;
  return c;
}

TEST(CompetitionTest, RandomVsRandomHasExactOpenerSplit) {
  AgentFactory factory({{"r1", Spec("r1", AgentKind::kRandom)},
                        {"r2", Spec("r2", AgentKind::kRandom)}});
  auto runs = RunCompetitions({Competition(GameId::kTicTacToe, "r1", "r2")}, factory, 4);
  ASSERT_EQ(runs.size(), 1u);
  const auto& run = runs[0];
  EXPECT_TRUE(run.complete());
  EXPECT_EQ(run.valid, 50);
  EXPECT_EQ(run.records.size(), 50u);
  int r1_opens = 0;
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    EXPECT_EQ(run.records[i].index, static_cast<int>(i));
    EXPECT_EQ(run.records[i].competition, run.config.id);
    if (run.records[i].agents[0] == "r1") ++r1_opens;
  }
  EXPECT_EQ(r1_opens, 25);
}

TEST(CompetitionTest, InvalidAttemptsKeepTheSplit) {
  AgentFactory factory({{"flaky", MockLlm("flaky", 0.3)},
                        {"r", Spec("r", AgentKind::kRandom)}});
  auto run = RunCompetitions({Competition(GameId::kConnectFour, "flaky", "r")}, factory, 3)[0];
  EXPECT_EQ(run.valid, 50);
  EXPECT_GT(run.records.size(), 50u);
  int flaky_opens = 0;
  for (const auto& r : run.records) {
    if (r.valid && r.agents[0] == "flaky") ++flaky_opens;
  }
  EXPECT_EQ(flaky_opens, 25);
}

TEST(CompetitionTest, SimultaneousGamesVarySeedsOnly) {
  AgentFactory factory({{"t", Spec("t", AgentKind::kTitForTat)},
                        {"r", Spec("r", AgentKind::kRandom)}});
  auto run = RunCompetitions({Competition(GameId::kPrisonersDilemma, "t", "r", 10)}, factory,
                             2)[0];
  EXPECT_EQ(run.valid, 10);
  for (const auto& r : run.records) EXPECT_EQ(r.agents[0], "t");
}

TEST(CompetitionTest, AttemptCapStopsANeverLegalAgent) {
  AgentSpec bad = Spec("bad", AgentKind::kConstant);
  bad.surface = "<C9R9>";
  AgentFactory factory({{"bad", bad}, {"r", Spec("r", AgentKind::kRandom)}});
  auto run = RunCompetitions({Competition(GameId::kTicTacToe, "bad", "r")}, factory, 8)[0];
  EXPECT_FALSE(run.complete());
  EXPECT_TRUE(run.cap_reached);
  // "bad" opens half of the attempts; as second player it fails too.
  EXPECT_EQ(run.records.size(), 200u);
  EXPECT_EQ(run.valid, 0);
}

TEST(CompetitionTest, SeedScheduleIsPure) {
  EXPECT_EQ(MatchSeed(1, "c", 0, 3), MatchSeed(1, "c", 0, 3));
  EXPECT_NE(MatchSeed(1, "c", 0, 3), MatchSeed(1, "c", 1, 3));
  EXPECT_NE(MatchSeed(1, "c", 0, 3), MatchSeed(1, "d", 0, 3));
  EXPECT_NE(MatchSeed(1, "c", 0, 3), MatchSeed(2, "c", 0, 3));
}

TournamentConfig SmallTournament(const fs::path& out, int parallelism) {
  TournamentConfig cfg;
  cfg.agents = {{"mock_a", MockLlm("mock_a", 0.1)},
                {"mock_b", MockLlm("mock_b", 0.0)},
                {"random", Spec("random", AgentKind::kRandom)}};
  for (GameId g : {GameId::kTicTacToe, GameId::kNim}) {
    cfg.competitions.push_back(Competition(g, "mock_a", "random", 10, 5));
    cfg.competitions.push_back(Competition(g, "mock_b", "random", 10, 5));
  }
  cfg.competitions.push_back(Competition(GameId::kNegotiation, "mock_a", "mock_b", 10, 5));
  cfg.output_dir = out;
  cfg.parallelism = parallelism;
  return cfg;
}

TEST(TournamentTest, ParallelismDoesNotChangeRecords) {
  const auto d1 = TempDir("serial");
  const auto d8 = TempDir("parallel");
  auto r1 = RunTournament(SmallTournament(d1, 1));
  auto r8 = RunTournament(SmallTournament(d8, 8));
  EXPECT_EQ(r1.AllRecords(), r8.AllRecords());
  for (const auto& run : r1.runs) {
    const auto rel = fs::relative(LogPath(d1 / "logs", run.config), d1);
    EXPECT_EQ(Slurp(d1 / rel), Slurp(d8 / rel)) << rel;
  }
  for (const auto& [name, contents] : r1.report.files) {
    EXPECT_EQ(contents, r8.report.File(name)) << name;
  }
}

TEST(TournamentTest, ReportFromLogsIsByteIdentical) {
  const auto dir = TempDir("replay");
  auto result = RunTournament(SmallTournament(dir, 4));
  auto [manifest, records] = LoadLogs(dir / "logs");
  EXPECT_EQ(manifest, result.manifest);
  auto rebuilt = BuildReport(manifest, records);
  ASSERT_EQ(rebuilt.files.size(), result.report.files.size());
  for (const auto& [name, contents] : result.report.files) {
    EXPECT_EQ(rebuilt.File(name), contents) << name;
    EXPECT_EQ(Slurp(dir / "reports" / name), contents) << name;
  }
  EXPECT_EQ(result.runs.size(), 5u);
  for (const auto& run : result.runs) EXPECT_TRUE(run.complete()) << run.config.id;
}

TEST(TournamentTest, FailingCompetitionIsIsolated) {
  TournamentConfig cfg;
  cfg.agents = {{"tft", Spec("tft", AgentKind::kTitForTat)},
                {"random", Spec("random", AgentKind::kRandom)}};
  // Tit-for-Tat only plays the prisoner's dilemma.
  cfg.competitions = {Competition(GameId::kTicTacToe, "tft", "random", 4),
                      Competition(GameId::kPrisonersDilemma, "tft", "random", 4)};
  cfg.output_dir = TempDir("isolated");
  cfg.parallelism = 2;
  auto result = RunTournament(cfg);
  EXPECT_TRUE(result.runs[0].error.has_value());
  EXPECT_TRUE(result.runs[1].complete());
  EXPECT_NE(result.report.File("nra_matrix.csv").find("prisoners_dilemma"), std::string::npos);
  EXPECT_FALSE(result.report.nra.at("tft").count(GameId::kTicTacToe));
  EXPECT_TRUE(result.report.nra.at("tft").count(GameId::kPrisonersDilemma));
}

TEST(ConfigTest, ParsesAgentsAndCompetitions) {
  auto cfg = ParseTournamentConfigString(R"(
schema = 1
base_seed = 9
parallelism = 3
valid_matches_target = 10
common_opponent = "random"
games = ["tictactoe", "nim"]

[agents.random]
kind = "random"

[agents.mcts]
kind = "mcts"
simulations = 200

[agents.mock]
kind = "llm"
client = "mock"
bad_match_rate = 0.1
temperature = 0.5
reasoning.style = "sc_cot"
reasoning.sc_trajectories = 3

[[competitions]]
game = "pig"
a = "mcts"
b = "mock"
valid_matches_target = 4
)");
  EXPECT_EQ(cfg.parallelism, 3);
  EXPECT_EQ(cfg.agents.at("mcts").mcts.num_simulations, 200);
  const auto& mock = cfg.agents.at("mock");
  EXPECT_EQ(mock.client, ClientKind::kMock);
  EXPECT_EQ(mock.reasoning.style, AgentStyle::kScCot);
  EXPECT_EQ(mock.reasoning.sc_trajectories, 3);
  EXPECT_DOUBLE_EQ(mock.generation.temperature, 0.5);
  EXPECT_EQ(mock.generation.max_tokens, 1024);
  // Two agents besides the common opponent, two games, plus one explicit.
  ASSERT_EQ(cfg.competitions.size(), 5u);
  EXPECT_EQ(cfg.competitions[0].id, "tictactoe__mcts__random");
  EXPECT_EQ(cfg.competitions[0].valid_matches_target, 10);
  EXPECT_EQ(cfg.competitions[0].base_seed, 9u);
  EXPECT_EQ(cfg.competitions[4].id, "pig__mcts__mock");
  EXPECT_EQ(cfg.competitions[4].valid_matches_target, 4);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(LoadTournamentConfig("/nonexistent/missing.toml"), ConfigError);
  try {
    LoadTournamentConfig("missing.toml");
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("config not found"), std::string::npos);
  }
  EXPECT_THROW(ParseTournamentConfigString("schema = 2"), ConfigError);
  EXPECT_THROW(ParseTournamentConfigString("schema = 1\n[agents.x]\nkind = \"oracle\""),
               ConfigError);
  EXPECT_THROW(ParseTournamentConfigString(
                   "schema = 1\n[agents.x]\nkind = \"random\"\n"
                   "[[competitions]]\ngame = \"nim\"\na = \"x\"\nb = \"y\""),
               ConfigError);
  EXPECT_THROW(ParseTournamentConfigString(
                   "schema = 1\nvalid_matches_target = 5\n[agents.x]\nkind = \"random\"\n"
                   "[agents.y]\nkind = \"random\"\n"
                   "[[competitions]]\ngame = \"nim\"\na = \"x\"\nb = \"y\""),
               ConfigError);
  EXPECT_THROW(ParseTournamentConfigString("schema = 1\nparallelism = \"many\""), ConfigError);
  EXPECT_THROW(ParseTournamentConfigString("schema = 1\n[agents.x\n"), ConfigError);
}

TEST(ConfigTest, MissingCredentialsFailAtSetup) {
  auto cfg = ParseTournamentConfigString(R"(
schema = 1
[agents.gpt]
kind = "llm"
model = "gpt-4"
endpoint = "https://api.openai.com/v1"
api_key_env = "GAMEARENA_TEST_UNSET_KEY"
)");
  EXPECT_THROW(AgentFactory factory(cfg.agents), Error);
}

TEST(ConfigTest, SampleConfigsParse) {
  for (const char* name : {"mock_tournament.toml", "openai_example.toml"}) {
    auto cfg = LoadTournamentConfig(fs::path(GAMEARENA_CONFIG_DIR) / name);
    EXPECT_FALSE(cfg.competitions.empty()) << name;
    EXPECT_NO_THROW(cfg.Validate()) << name;
  }
}

}  // namespace
}  // namespace gamearena
