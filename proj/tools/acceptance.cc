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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All tolerances and time limits are fixed below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/llm/agents.hpp"
#include "gamearena/llm/chat_client.hpp"
#include "gamearena/match.hpp"
#include "gamearena/metrics.hpp"
#include "gamearena/orchestrator/config.hpp"
#include "gamearena/orchestrator/tournament.hpp"
#include "gamearena/prompt_goldens.hpp"
#include "gamearena/prompts.hpp"
#include "gamearena/report.hpp"
#include "gamearena/solvers/kuhn_equilibrium.hpp"
#include "gamearena/solvers/mcts.hpp"
#include "gamearena/solvers/oracle.hpp"
#include "gamearena/solvers/tit_for_tat.hpp"

namespace {

using namespace gamearena;
namespace fs = std::filesystem;

constexpr double kKuhnValueTolerance = 1e-9;
constexpr double kMctsNraTicTacToe = 0.8;
constexpr double kMctsNraOther = 0.9;
constexpr int kSuitePositions = 20;
constexpr int kSuiteSeedsPerPosition = 5;
constexpr double kSuiteOptimalRate = 0.95;
constexpr double kBadCompletionLow = 0.85;
constexpr double kBadCompletionHigh = 0.95;
constexpr int kBadReps = 20;

// A criterion collects failure notes; it passes when none were recorded.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

int Parallelism() { return std::max(1u, std::thread::hardware_concurrency()); }

fs::path TempDir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("gamearena_acceptance_" + name);
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

AgentSpec MockSpec(const std::string& id, double bad_rate) {
  AgentSpec s = Spec(id, AgentKind::kLlm);
  s.client = ClientKind::kMock;
  s.reasoning.style = AgentStyle::kCot;
  s.bad_match_rate = bad_rate;
  return s;
}

CompetitionConfig Competition(GameId game, const std::string& a, const std::string& b,
                              std::uint64_t seed, int target = 50) {
  CompetitionConfig c;
  c.game = game;
  c.agent_a = a;
  c.agent_b = b;
  c.id = DefaultCompetitionId(game, a, b);
  c.valid_matches_target = target;
  c.base_seed = seed;
  return c;
}

// 1. Metric exactness -------------------------------------------------------

void Metrics(Check& c) {
  c.Expect(AuctionRegret(7, 4, 10) == 2, "auction regret (7,4,10) != 2");
  c.Expect(AuctionRegret(3, 4, 10) == 5, "auction regret (3,4,10) != 5");
  c.Expect(AuctionRegret(3, 4, 4) == 0, "auction regret (3,4,4) != 0");
  c.Expect(IpdRegret("<Testify>", "<Silent>") == 0, "ipd regret (T,S) != 0");
  c.Expect(IpdRegret("<Testify>", "<Testify>") == 0, "ipd regret (T,T) != 0");
  c.Expect(IpdRegret("<Silent>", "<Testify>") == 1, "ipd regret (S,T) != 1");
  c.Expect(IpdRegret("<Silent>", "<Silent>") == 2, "ipd regret (S,S) != 2");
  c.Expect(EloUpdate(1500, 1500, 1) == std::make_pair(1510.0, 1490.0),
           "elo (1500,1500,win) != (1510,1490)");
  c.Expect(EloExpected(1500, 1500).first == 0.5, "elo expectation at equal ratings != 0.5");
  c.Expect(Nra(std::vector<double>(50, 1), std::vector<double>(50, 0)) == 1,
           "nra of all wins != 1");
  c.Expect(Nra({1, 0, 0.5, 0.5}, {0, 1, 0.5, 0.5}) == 0, "nra of equal scores != 0");
  const std::vector<double> a = {1, 0.5, 0, 1, 1}, b = {0, 0.5, 1, 0, 0.5};
  c.Expect(Nra(a, b) == -Nra(b, a), "nra not antisymmetric");
}

// 2. Oracles ----------------------------------------------------------------

void KuhnEnumerate(const GameState& s, int& terminals, Check& c) {
  if (s.IsTerminal()) {
    ++terminals;
    const double r = GetOutcome(s).returns[0];
    c.Expect(std::abs(r) == 1 || std::abs(r) == 2, "kuhn return outside {+-1,+-2}");
    return;
  }
  for (const auto& a : LegalActions(s, s.CurrentPlayer())) KuhnEnumerate(Apply(s, a), terminals, c);
}

void Oracles(Check& c) {
  c.Expect(OracleSolve(NewMatch(GameId::kTicTacToe, 0)).value == 0,
           "tic-tac-toe start is not a draw");
  c.Expect(OracleSolve(NewMatch(GameId::kNim, 0)).value == -1,
           "misere nim (1,3,5,7) is not lost for the mover");
  int terminals = 0;
  for (const auto& deal : games::KuhnPoker::kDeals) {
    KuhnEnumerate(GameState::From<games::KuhnPoker>(games::KuhnPoker::WithCards(deal), 0),
                  terminals, c);
  }
  c.Expect(terminals == 30, "kuhn terminal count " + std::to_string(terminals) + " != 30");
  const double v = kuhn::SolveNormalForm().value.convert_to<double>();
  c.Note("kuhn value " + Fmt("%.12f", v));
  c.Expect(std::abs(v + 1.0 / 18) <= kKuhnValueTolerance, "kuhn value != -1/18");
}

// 3. MCTS versus random -----------------------------------------------------

// Independent line check on a 3x3 board of owners (-1 empty).
bool HasImmediateWin(const std::array<int, 9>& cells, int player) {
  static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                       {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
  for (const auto& line : kLines) {
    int mine = 0, empty = 0;
    for (int i : line) {
      mine += cells[i] == player;
      empty += cells[i] < 0;
    }
    if (mine == 2 && empty == 1) return true;
  }
  return false;
}

// Positions where the mover can win at once (10) or must block an immediate
// opponent win (10), drawn from seeded random playouts.
std::vector<GameState> TacticalSuite() {
  std::vector<GameState> wins, blocks;
  std::set<std::array<int, 9>> seen;
  for (std::uint64_t seed = 0; wins.size() + blocks.size() < kSuitePositions; ++seed) {
    Rng rng(HashCombine(seed, HashTag("tactical-suite")));
    GameState s = NewMatch(GameId::kTicTacToe, 0);
    while (!s.IsTerminal()) {
      const auto& pos = s.As<games::TicTacToe>();
      const int me = pos.to_move;
      const bool win = HasImmediateWin(pos.cells, me);
      const bool block = !win && HasImmediateWin(pos.cells, Opponent(me));
      if ((win && wins.size() < kSuitePositions / 2) ||
          (block && blocks.size() < kSuitePositions / 2)) {
        if (seen.insert(pos.cells).second) (win ? wins : blocks).push_back(s);
        break;
      }
      auto legal = LegalActions(s, me);
      s = Apply(s, legal[rng.Below(legal.size())]);
    }
  }
  wins.insert(wins.end(), blocks.begin(), blocks.end());
  return wins;
}

void MctsVsRandom(Check& c) {
  AgentSpec mcts = Spec("mcts", AgentKind::kMcts);
  mcts.mcts.num_simulations = 1000;
  AgentFactory factory({{"mcts", mcts}, {"random", Spec("random", AgentKind::kRandom)}});
  const std::map<GameId, double> thresholds = {{GameId::kTicTacToe, kMctsNraTicTacToe},
                                               {GameId::kConnectFour, kMctsNraOther},
                                               {GameId::kNim, kMctsNraOther}};
  std::vector<CompetitionConfig> configs;
  for (const auto& [game, t] : thresholds) configs.push_back(Competition(game, "mcts", "random", 7));
  auto runs = RunCompetitions(configs, factory, Parallelism());
  auto manifest = ManifestOf(runs);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const GameId game = configs[i].game;
    auto summary = Summarize(manifest.competitions[i], runs[i].records);
    const std::string name(GameName(game));
    c.Note(name + " nra " + Fmt("%.3f", summary.nra()));
    c.Expect(summary.valid == 50, name + ": " + std::to_string(summary.valid) + " valid != 50");
    c.Expect(summary.nra() >= thresholds.at(game), name + ": nra below threshold");
  }

  MctsConfig config;
  config.num_simulations = 1000;
  int optimal = 0, trials = 0;
  for (const auto& s : TacticalSuite()) {
    const auto best = OracleSolve(s).optimal_actions;
    for (int k = 0; k < kSuiteSeedsPerPosition; ++k) {
      const auto a = MctsAct(s, s.CurrentPlayer(), config, HashCombine(trials, HashTag("suite")));
      ++trials;
      optimal += std::find(best.begin(), best.end(), a) != best.end();
    }
  }
  c.Note("tactical suite " + std::to_string(optimal) + "/" + std::to_string(trials));
  c.Expect(trials == kSuitePositions * kSuiteSeedsPerPosition, "tactical suite size");
  c.Expect(optimal >= kSuiteOptimalRate * trials, "tactical suite below 95% optimal");
}

// 4. Tit-for-Tat traces -----------------------------------------------------

void TitForTatTraces(Check& c) {
  TitForTatAgent a("tft_a"), b("tft_b");
  auto rec = RunMatch(GameId::kPrisonersDilemma, {&a, &b}, 0);
  c.Expect(rec.valid, "tft vs tft invalid");
  for (const auto& t : rec.turns) c.Expect(t.action == "<Silent>", "tft vs tft played " + t.action);
  for (const auto& r : RecordSystemRewards(rec)) {
    c.Expect(r.payoffs == std::array<double, 2>{2, 2}, "tft vs tft round payoff != (2,2)");
  }
  for (const auto& r : RecordRegrets(rec)) {
    c.Expect(r.regret == std::array<int, 2>{2, 2}, "tft vs tft round regret != 2");
  }

  TitForTatAgent tft;
  ConstantAgent testify("<Testify>", "testify");
  auto rec2 = RunMatch(GameId::kPrisonersDilemma, {&tft, &testify}, 0);
  c.Expect(rec2.valid, "tft vs testify invalid");
  int round = 0;
  for (const auto& t : rec2.turns) {
    if (t.player != 0) continue;
    c.Expect(t.action == (round == 0 ? "<Silent>" : "<Testify>"),
             "tft vs testify round " + std::to_string(round + 1) + ": " + t.action);
    ++round;
  }
  c.Expect(round == 5, "tft vs testify rounds != 5");
}

// 5. Prompts ----------------------------------------------------------------

void Prompts(Check& c) {
  auto golden = CheckPromptGoldens(fs::path(GAMEARENA_PROMPT_DIR) / "golden");
  c.Note(std::to_string(golden.checked) + " goldens");
  c.Expect(golden.ok(), std::to_string(golden.mismatches.size()) + " golden mismatches");
  int parsed = 0;
  for (GameId game : kAllGames) {
    int states = 0;
    for (std::uint64_t seed = 0; states < 100; ++seed) {
      Rng rng(HashCombine(seed, HashTag("round-trip")));
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
        auto r = ParseAction("Thought:\nok\n\nAction:\n" + a.surface, s, p);
        ++parsed;
        c.Expect(r.status == ParseStatus::kOk && r.action->surface == a.surface,
                 std::string(GameName(game)) + ": " + a.surface + " does not round-trip");
      }
    }
  }
  c.Note(std::to_string(parsed) + " actions round-tripped");
}

// 6. Mock tournament --------------------------------------------------------

void MockTournament(Check& c) {
  TournamentConfig cfg;
  cfg.agents = {{"mock_good", MockSpec("mock_good", 0.0)},
                {"random", Spec("random", AgentKind::kRandom)}};
  for (GameId g : {GameId::kTicTacToe, GameId::kConnectFour, GameId::kNim,
                   GameId::kBreakthrough, GameId::kKuhnPoker}) {
    cfg.competitions.push_back(Competition(g, "mock_good", "random", 11));
  }
  cfg.output_dir = TempDir("mock");
  cfg.parallelism = Parallelism();
  auto result = RunTournament(cfg);
  for (const auto& run : result.runs) {
    int opens = 0;
    for (const auto& r : run.records) opens += r.valid && r.agents[0] == "mock_good";
    c.Expect(run.valid == 50, run.config.id + ": valid != 50");
    c.Expect(opens == 25, run.config.id + ": opener split not 25/25");
    c.Expect(run.records.size() == 50, run.config.id + ": completion != 1.00");
  }

  // Replaying the persisted logs must reproduce every report byte for byte.
  auto [manifest, records] = LoadLogs(cfg.output_dir / "logs");
  auto rebuilt = BuildReport(manifest, records);
  c.Expect(rebuilt.files.size() == result.report.files.size(), "report file count differs");
  for (const auto& [name, contents] : result.report.files) {
    c.Expect(rebuilt.File(name) == contents, "replayed " + name + " differs");
    c.Expect(Slurp(cfg.output_dir / "reports" / name) == contents, "written " + name + " differs");
  }

  AgentFactory factory({{"mock_bad", MockSpec("mock_bad", 0.1)},
                        {"random", Spec("random", AgentKind::kRandom)}});
  std::vector<CompetitionConfig> reps;
  for (int r = 0; r < kBadReps; ++r) {
    auto comp = Competition(GameId::kTicTacToe, "mock_bad", "random", 1000 + r);
    comp.id += "__rep" + std::to_string(r);
    reps.push_back(comp);
  }
  int valid = 0, attempted = 0;
  for (const auto& run : RunCompetitions(reps, factory, Parallelism())) {
    valid += run.valid;
    attempted += static_cast<int>(run.records.size());
  }
  const double rate = CompletionRate(valid, attempted);
  c.Note("10%-bad completion " + Fmt("%.3f", rate));
  c.Expect(rate >= kBadCompletionLow && rate <= kBadCompletionHigh,
           "10%-bad completion outside [0.85, 0.95]");
}

// 7. Parallelism invariance -------------------------------------------------

void ParallelismInvariance(Check& c) {
  auto make = [](const fs::path& out, int parallelism) {
    TournamentConfig cfg;
    AgentSpec mcts = Spec("mcts", AgentKind::kMcts);
    mcts.mcts.num_simulations = 100;
    cfg.agents = {{"mock_a", MockSpec("mock_a", 0.1)},
                  {"mock_b", MockSpec("mock_b", 0.0)},
                  {"mcts", mcts},
                  {"random", Spec("random", AgentKind::kRandom)}};
    for (GameId g : {GameId::kTicTacToe, GameId::kPig, GameId::kLiarsDice,
                     GameId::kBlindAuction, GameId::kPrisonersDilemma}) {
      cfg.competitions.push_back(Competition(g, "mock_a", "mcts", 3, 10));
      cfg.competitions.push_back(Competition(g, "mock_b", "random", 3, 10));
    }
    cfg.competitions.push_back(Competition(GameId::kNegotiation, "mock_a", "mock_b", 3, 10));
    cfg.output_dir = out;
    cfg.parallelism = parallelism;
    return cfg;
  };
  const auto d1 = TempDir("p1");
  const auto d8 = TempDir("p8");
  auto r1 = RunTournament(make(d1, 1));
  RunTournament(make(d8, 8));
  int files = 0;
  for (const auto& run : r1.runs) {
    const auto rel = fs::relative(LogPath(d1 / "logs", run.config), d1);
    const std::string a = Slurp(d1 / rel);
    c.Expect(!a.empty() && a == Slurp(d8 / rel), rel.string() + " differs");
    ++files;
  }
  c.Note(std::to_string(files) + " log files compared");
}

// 8. Pareto points and system reward ----------------------------------------

void ParetoAndReward(Check& c) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pos = NewMatch(GameId::kNegotiation, seed).As<games::Negotiation>();
    // Seat 0 claims all of item 1 and the first of item 2; seat 1 agrees.
    const std::array<int, 3> take = {pos.pool[0], std::min(1, pos.pool[1]), 0};
    const std::string proposal = "<Proposal: [" + std::to_string(take[0]) + ", " +
                                 std::to_string(take[1]) + ", 0]>";
    LlmAgent a("a", std::make_shared<ScriptedClient>(
                        std::vector<std::string>{proposal, "<Utterance: [0, 0, 0]>"}),
               {});
    LlmAgent b("b", std::make_shared<ScriptedClient>(std::vector<std::string>{"<Agree>"}), {});
    auto rec = RunMatch(GameId::kNegotiation, {&a, &b}, seed);
    const std::string tag = "negotiation seed " + std::to_string(seed);
    c.Expect(rec.valid, tag + " invalid");
    if (!rec.valid) continue;
    const auto end = ReplayRecord(rec).As<games::Negotiation>();
    for (int k = 0; k < 3; ++k) {
      c.Expect(end.allocation[0][k] + end.allocation[1][k] == pos.pool[k],
               tag + ": allocation does not sum to pool");
    }
    const int x = pos.values[0][0] * take[0] + pos.values[0][1] * take[1];
    const int y = pos.values[1][0] * (pos.pool[0] - take[0]) +
                  pos.values[1][1] * (pos.pool[1] - take[1]) + pos.values[1][2] * pos.pool[2];
    auto point = RecordParetoPoint(rec);
    c.Expect(point && point->x == x && point->y == y, tag + ": point != dot products");
  }

  TitForTatAgent tft;
  ConstantAgent testify("<Testify>", "testify");
  auto rec = RunMatch(GameId::kPrisonersDilemma, {&tft, &testify}, 0);
  const auto series = RecordSystemRewards(rec);
  // Per-round payoffs read straight off the turn log.
  const std::map<std::pair<std::string, std::string>, std::array<double, 2>> table = {
      {{"<Silent>", "<Silent>"}, {2, 2}},
      {{"<Silent>", "<Testify>"}, {0, 3}},
      {{"<Testify>", "<Silent>"}, {3, 0}},
      {{"<Testify>", "<Testify>"}, {1, 1}}};
  std::vector<std::string> moves[2];
  for (const auto& t : rec.turns) moves[t.player].push_back(t.action);
  c.Expect(series.size() == moves[0].size() && moves[0].size() == 5, "ipd series length");
  for (std::size_t r = 0; r < series.size() && r < moves[0].size(); ++r) {
    const auto pay = table.at({moves[0][r], moves[1][r]});
    c.Expect(series[r].system == pay[0] + pay[1], "ipd round " + std::to_string(r + 1) +
                                                      " system reward != sum");
  }
  double best = 0;
  std::array<double, 2> argmax{};
  for (const auto& [joint, pay] : table) {
    const double s = SystemReward(pay);
    if (s > best) best = s, argmax = pay;
  }
  c.Expect(best == 4 && argmax == std::array<double, 2>{2, 2}, "(S,S)=4 is not the max");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"metric exactness", 1, Metrics},
      {"oracles", 60, Oracles},
      {"mcts vs random", 600, MctsVsRandom},
      {"tit-for-tat traces", 60, TitForTatTraces},
      {"prompt goldens and round trip", 60, Prompts},
      {"mock tournament", 300, MockTournament},
      {"parallelism invariance", 300, ParallelismInvariance},
      {"pareto points and system reward", 60, ParetoAndReward},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.Expect(secs <= criteria[i].limit_s,
                 "took longer than " + Fmt("%.0f", criteria[i].limit_s) + " s");
    std::string detail;
    for (const auto& n : check.notes()) detail += (detail.empty() ? "" : "; ") + n;
    for (const auto& f : check.failures()) detail += (detail.empty() ? "" : "; ") + f;
    std::printf("%s %zu %s (%.2f s)%s%s\n", check.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    failed += !check.ok();
  }
  return failed == 0 ? 0 : 1;
}
