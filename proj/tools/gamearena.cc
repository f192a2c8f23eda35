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

// Command-line front end: play single matches, run competitions and
// tournaments, rebuild reports from logs and check the prompt goldens.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gamearena/match.hpp"
#include "gamearena/orchestrator/config.hpp"
#include "gamearena/orchestrator/tournament.hpp"
#include "gamearena/prompt_goldens.hpp"
#include "gamearena/report.hpp"

namespace {

using namespace gamearena;
namespace fs = std::filesystem;

// Agents usable without a config file.
std::map<std::string, AgentSpec> BuiltinAgents() {
  std::map<std::string, AgentSpec> out;
  auto add = [&](const std::string& id, AgentKind kind) {
    AgentSpec s;
    s.id = id;
    s.kind = kind;
    return &out.emplace(id, s).first->second;
  };
  add("random", AgentKind::kRandom);
  add("mcts", AgentKind::kMcts);
  add("tit_for_tat", AgentKind::kTitForTat);
  AgentSpec* mock = add("mock", AgentKind::kLlm);
  mock->client = ClientKind::kMock;
  mock->reasoning.style = AgentStyle::kCot;
  return out;
}

// Config agents override built-ins of the same id.
std::map<std::string, AgentSpec> AgentsFrom(const std::string& config_path) {
  auto agents = BuiltinAgents();
  if (!config_path.empty()) {
    for (auto& [id, spec] : LoadTournamentConfig(config_path).agents) agents[id] = spec;
  }
  return agents;
}

void PrintSummary(const TournamentResult& result, const fs::path& output) {
  for (const auto& run : result.runs) {
    std::cout << run.config.id << ": " << run.valid << " valid / " << run.records.size()
              << " attempted";
    if (run.error) std::cout << " (aborted: " << *run.error << ")";
    if (run.cap_reached) std::cout << " (attempt cap reached)";
    std::cout << "\n";
  }
  std::cout << "logs: " << (output / "logs").string() << "\n"
            << "reports: " << (output / "reports").string() << "\n\n"
            << result.report.File("leaderboard.md");
}

int Play(const std::string& game_name, const std::string& a, const std::string& b,
         std::uint64_t seed, const std::string& config, std::optional<int> sims, bool json) {
  auto agents = AgentsFrom(config);
  if (sims) {
    for (auto& [id, spec] : agents) spec.mcts.num_simulations = *sims;
  }
  AgentFactory factory(agents);
  const GameId game = ParseGameId(game_name);
  auto a0 = factory.Make(a, AgentSeed(seed, 0));
  auto a1 = factory.Make(b, AgentSeed(seed, 1));
  MatchRecord rec = RunMatch(game, {a0.get(), a1.get()}, seed);
  if (json) {
    std::cout << ToJsonLine(rec);
    return 0;
  }
  std::cout << "game " << rec.game << ", seed " << seed << ": " << rec.agents[0]
            << " (player 0) vs " << rec.agents[1] << " (player 1)\n";
  int ply = 0;
  for (const auto& t : rec.turns) {
    std::cout << ++ply << ". player " << t.player << " (" << rec.agents[t.player]
              << "): " << t.action << (t.legal ? "" : "  [illegal]") << "\n";
  }
  if (!rec.valid) {
    std::cout << "invalid match: " << rec.invalid_cause.value_or("?") << "\n";
    return 0;
  }
  std::cout << "returns: " << rec.outcome->returns[0] << ", " << rec.outcome->returns[1];
  if (rec.outcome->draw) {
    std::cout << " (draw)";
  } else if (rec.outcome->winner) {
    std::cout << " (winner: " << rec.agents[*rec.outcome->winner] << ")";
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic evaluation arena for LLM and search agents"};
  app.require_subcommand(1);

  // play
  auto* play = app.add_subcommand("play", "Play one match and print every turn");
  std::string game, agent_a = "random", agent_b = "random", config;
  std::uint64_t seed = 0;
  std::optional<int> sims;
  bool json = false;
  play->add_option("--game", game, "Game id")->required();
  play->add_option("--a", agent_a, "Agent in seat 0");
  play->add_option("--b", agent_b, "Agent in seat 1");
  play->add_option("--seed", seed, "Match seed");
  play->add_option("--config", config, "Config file with agent definitions");
  play->add_option("--sims", sims, "MCTS simulations per move");
  play->add_flag("--json", json, "Print the match record as JSON");

  // compete
  auto* compete = app.add_subcommand("compete", "Run one competition");
  std::string c_game, c_a, c_b, c_config;
  int c_target = 50, c_parallelism = 1;
  std::uint64_t c_seed = 0;
  std::string c_output = "gamearena_out";
  compete->add_option("--game", c_game, "Game id")->required();
  compete->add_option("--a", c_a, "Agent A")->required();
  compete->add_option("--b", c_b, "Agent B")->required();
  compete->add_option("--config", c_config, "Config file with agent definitions");
  compete->add_option("--target", c_target, "Valid matches to collect");
  compete->add_option("--seed", c_seed, "Base seed");
  compete->add_option("--parallelism", c_parallelism, "Concurrent matches");
  compete->add_option("--output", c_output, "Output directory");

  // tournament
  auto* tournament = app.add_subcommand("tournament", "Run every competition of a config");
  std::string t_config;
  std::optional<int> t_parallelism;
  std::optional<std::string> t_output;
  std::optional<std::uint64_t> t_seed;
  tournament->add_option("config", t_config, "Tournament config (TOML)")->required();
  tournament->add_option("--parallelism", t_parallelism, "Override parallelism");
  tournament->add_option("--output", t_output, "Override output_dir");
  tournament->add_option("--seed", t_seed, "Override base_seed of every competition");

  // report
  auto* report = app.add_subcommand("report", "Recompute metrics from persisted logs");
  std::string r_logs, r_out;
  report->add_option("--logs", r_logs, "Log directory (holds manifest.json)")->required();
  report->add_option("--out", r_out, "Report directory (default: ../reports next to logs)");

  // validate-prompts
  auto* validate = app.add_subcommand("validate-prompts", "Check prompts against goldens");
  std::string golden = std::string(GAMEARENA_PROMPT_DIR) + "/golden";
  validate->add_option("--golden", golden, "Golden directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*play) return Play(game, agent_a, agent_b, seed, config, sims, json);

    if (*compete) {
      TournamentConfig cfg;
      cfg.agents = AgentsFrom(c_config);
      CompetitionConfig c;
      c.game = ParseGameId(c_game);
      c.agent_a = c_a;
      c.agent_b = c_b;
      c.id = DefaultCompetitionId(c.game, c_a, c_b);
      c.valid_matches_target = c_target;
      c.base_seed = c_seed;
      cfg.competitions = {c};
      cfg.parallelism = c_parallelism;
      cfg.output_dir = c_output;
      auto result = RunTournament(cfg);
      PrintSummary(result, cfg.output_dir);
      return result.runs[0].complete() ? 0 : 1;
    }

    if (*tournament) {
      TournamentConfig cfg = LoadTournamentConfig(t_config);
      if (t_parallelism) cfg.parallelism = *t_parallelism;
      if (t_output) cfg.output_dir = *t_output;
      if (t_seed) {
        for (auto& c : cfg.competitions) c.base_seed = *t_seed;
      }
      auto result = RunTournament(cfg);
      PrintSummary(result, cfg.output_dir);
      return 0;
    }

    if (*report) {
      auto [manifest, records] = LoadLogs(r_logs);
      const fs::path out = r_out.empty() ? fs::path(r_logs).parent_path() / "reports"
                                         : fs::path(r_out);
      auto rep = BuildReport(manifest, records);
      WriteReport(rep, out);
      std::cout << "reports: " << out.string() << "\n\n" << rep.File("leaderboard.md");
      return 0;
    }

    if (*validate) {
      auto check = CheckPromptGoldens(golden);
      for (const auto& name : check.mismatches) std::cout << "MISMATCH " << name << "\n";
      std::cout << check.checked - static_cast<int>(check.mismatches.size()) << "/"
                << check.checked << " goldens match\n";
      return check.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
