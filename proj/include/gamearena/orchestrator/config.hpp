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

#ifndef GAMEARENA_ORCHESTRATOR_CONFIG_HPP_
#define GAMEARENA_ORCHESTRATOR_CONFIG_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/llm/agents.hpp"
#include "gamearena/llm/chat_client.hpp"
#include "gamearena/solvers/mcts.hpp"
#include "gamearena/types.hpp"
#include "toml.hpp"

namespace gamearena {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class AgentKind { kRandom, kMcts, kTitForTat, kConstant, kLlm };

// How an LLM agent reaches its model.
enum class ClientKind { kHttp, kMock, kScripted };

struct AgentSpec {
  std::string id;
  AgentKind kind = AgentKind::kRandom;
  MctsConfig mcts;
  std::string surface;  // constant agents
  // LLM agents.
  ClientKind client = ClientKind::kHttp;
  std::string model;
  std::string endpoint;
  std::string api_key_env;
  GenerationParams generation;
  ReasoningConfig reasoning;
  int timeout_ms = 120'000;
  int max_in_flight = 8;
  double bad_match_rate = 0;  // mock client
  std::string script;         // scripted client playback file
};

struct CompetitionConfig {
  std::string id;
  GameId game = GameId::kTicTacToe;
  std::string agent_a;
  std::string agent_b;
  int valid_matches_target = 50;
  bool alternate_first_player = true;
  std::uint64_t base_seed = 0;
  int attempt_cap_factor = 4;
};

struct TournamentConfig {
  static constexpr int kSchema = 1;
  std::map<std::string, AgentSpec> agents;
  std::vector<CompetitionConfig> competitions;
  std::optional<std::string> common_opponent;
  std::filesystem::path output_dir = "gamearena_out";
  int parallelism = 1;
  std::uint64_t base_seed = 0;

  void Validate() const;
};

inline bool IsValidId(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.';
  });
}

inline std::string DefaultCompetitionId(GameId game, const std::string& a,
                                        const std::string& b) {
  return std::string(GameName(game)) + "__" + a + "__" + b;
}

inline void ValidateCompetition(const CompetitionConfig& c) {
  if (!IsValidId(c.id)) throw ConfigError("invalid competition id '" + c.id + "'");
  if (c.agent_a == c.agent_b) {
    throw ConfigError("competition " + c.id + " needs two distinct agent ids");
  }
  if (c.valid_matches_target < 1) {
    throw ConfigError("competition " + c.id + ": valid_matches_target must be positive");
  }
  if (c.alternate_first_player && c.valid_matches_target % 2 != 0 &&
      SpecOf(c.game).turn_mode != TurnMode::kSimultaneous) {
    throw ConfigError("competition " + c.id +
                      ": valid_matches_target must be even when alternating openers");
  }
  if (c.attempt_cap_factor < 1) {
    throw ConfigError("competition " + c.id + ": attempt_cap_factor must be positive");
  }
}

inline void TournamentConfig::Validate() const {
  if (parallelism < 1) throw ConfigError("parallelism must be positive");
  for (const auto& [id, spec] : agents) {
    if (!IsValidId(id)) throw ConfigError("invalid agent id '" + id + "'");
    try {
      spec.mcts.Validate();
      spec.reasoning.Validate();
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError("agent " + id + ": " + e.what());
    }
  }
  std::vector<std::string> ids;
  for (const auto& c : competitions) {
    ValidateCompetition(c);
    for (const auto& a : {c.agent_a, c.agent_b}) {
      if (!agents.count(a)) throw ConfigError("competition " + c.id + ": unknown agent " + a);
    }
    ids.push_back(c.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ConfigError("duplicate competition ids");
  }
}

namespace config_internal {

template <class T>
T Get(const toml::table& t, std::string_view key, T fallback, const std::string& where) {
  const auto* node = t.get(key);
  if (node == nullptr) return fallback;
  if constexpr (std::is_same_v<T, double>) {
    if (auto v = node->value<double>()) return *v;
  } else if constexpr (std::is_same_v<T, bool>) {
    if (auto v = node->value<bool>()) return *v;
  } else if constexpr (std::is_integral_v<T>) {
    if (auto v = node->value<std::int64_t>()) return static_cast<T>(*v);
  } else {
    if (auto v = node->value<std::string>()) return *v;
  }
  throw ConfigError(where + ": key '" + std::string(key) + "' has the wrong type");
}

inline const toml::table& Table(const toml::node& n, const std::string& where) {
  const auto* t = n.as_table();
  if (t == nullptr) throw ConfigError(where + " must be a table");
  return *t;
}

inline AgentSpec ParseAgent(const std::string& id, const toml::table& t) {
  const std::string where = "agent " + id;
  AgentSpec a;
  a.id = id;
  const std::string kind = Get<std::string>(t, "kind", "", where);
  if (kind == "random") {
    a.kind = AgentKind::kRandom;
  } else if (kind == "mcts") {
    a.kind = AgentKind::kMcts;
    a.mcts.num_simulations = Get(t, "simulations", a.mcts.num_simulations, where);
    a.mcts.exploration_constant =
        Get(t, "exploration_constant", a.mcts.exploration_constant, where);
    a.mcts.max_rollout_depth = Get(t, "max_rollout_depth", a.mcts.max_rollout_depth, where);
    a.mcts.determinizations = Get(t, "determinizations", a.mcts.determinizations, where);
  } else if (kind == "tit_for_tat") {
    a.kind = AgentKind::kTitForTat;
  } else if (kind == "constant") {
    a.kind = AgentKind::kConstant;
    a.surface = Get<std::string>(t, "action", "", where);
    if (a.surface.empty()) throw ConfigError(where + ": constant agents need 'action'");
  } else if (kind == "llm") {
    a.kind = AgentKind::kLlm;
    const std::string client = Get<std::string>(t, "client", "http", where);
    if (client == "http") {
      a.client = ClientKind::kHttp;
    } else if (client == "mock") {
      a.client = ClientKind::kMock;
    } else if (client == "scripted") {
      a.client = ClientKind::kScripted;
    } else {
      throw ConfigError(where + ": unknown client '" + client + "'");
    }
    a.model = Get<std::string>(t, "model", "", where);
    a.endpoint = Get<std::string>(t, "endpoint", "", where);
    a.api_key_env = Get<std::string>(t, "api_key_env", "", where);
    a.generation.temperature = Get(t, "temperature", a.generation.temperature, where);
    a.generation.max_tokens = Get(t, "max_tokens", a.generation.max_tokens, where);
    a.timeout_ms = static_cast<int>(Get(t, "timeout_s", a.timeout_ms / 1000.0, where) * 1000);
    a.max_in_flight = Get(t, "max_in_flight", a.max_in_flight, where);
    a.bad_match_rate = Get(t, "bad_match_rate", a.bad_match_rate, where);
    a.script = Get<std::string>(t, "script", "", where);
    if (const auto* r = t.get("reasoning")) {
      const auto& rt = Table(*r, where + ".reasoning");
      a.reasoning.style = ParseAgentStyle(Get<std::string>(rt, "style", "prompt", where));
      a.reasoning.sc_trajectories =
          Get(rt, "sc_trajectories", a.reasoning.sc_trajectories, where);
      a.reasoning.tot_candidates = Get(rt, "tot_candidates", a.reasoning.tot_candidates, where);
      a.reasoning.tot_votes = Get(rt, "tot_votes", a.reasoning.tot_votes, where);
      a.reasoning.retries = Get(rt, "retries", a.reasoning.retries, where);
      a.reasoning.cot_template = Get<std::string>(rt, "cot_template", "", where);
    }
    if (a.client == ClientKind::kHttp && (a.model.empty() || a.endpoint.empty())) {
      throw ConfigError(where + ": http clients need 'model' and 'endpoint'");
    }
    if (a.client == ClientKind::kScripted && a.script.empty()) {
      throw ConfigError(where + ": scripted clients need 'script'");
    }
  } else {
    throw ConfigError(where + ": unknown kind '" + kind + "'");
  }
  return a;
}

}  // namespace config_internal

// Parses a tournament document. Competitions come from explicit
// [[competitions]] entries, plus, when `common_opponent` and `games` are set,
// one competition per (other agent, game) against the common opponent.
inline TournamentConfig ParseTournamentConfig(const toml::table& doc,
                                              const std::filesystem::path& base_dir = {}) {
  using config_internal::Get;
  const std::string where = "config";
  const auto schema = Get<int>(doc, "schema", 0, where);
  if (schema != TournamentConfig::kSchema) {
    throw ConfigError("unsupported config schema " + std::to_string(schema) +
                      " (expected " + std::to_string(TournamentConfig::kSchema) + ")");
  }
  TournamentConfig cfg;
  cfg.output_dir = Get<std::string>(doc, "output_dir", cfg.output_dir.string(), where);
  if (cfg.output_dir.is_relative() && !base_dir.empty()) cfg.output_dir = base_dir / cfg.output_dir;
  cfg.parallelism = Get(doc, "parallelism", cfg.parallelism, where);
  cfg.base_seed = Get<std::uint64_t>(doc, "base_seed", 0, where);
  const int target = Get(doc, "valid_matches_target", 50, where);
  const int cap = Get(doc, "attempt_cap_factor", 4, where);
  const bool alternate = Get(doc, "alternate_first_player", true, where);

  if (const auto* agents = doc.get("agents")) {
    for (const auto& [key, node] : config_internal::Table(*agents, "agents")) {
      const std::string id(key.str());
      auto spec = config_internal::ParseAgent(id, config_internal::Table(node, "agent " + id));
      if (!spec.script.empty() && std::filesystem::path(spec.script).is_relative() &&
          !base_dir.empty()) {
        spec.script = (base_dir / spec.script).string();
      }
      cfg.agents.emplace(id, std::move(spec));
    }
  }

  auto make = [&](GameId game, const std::string& a, const std::string& b) {
    CompetitionConfig c;
    c.game = game;
    c.agent_a = a;
    c.agent_b = b;
    c.id = DefaultCompetitionId(game, a, b);
    c.valid_matches_target = target;
    c.alternate_first_player = alternate;
    c.base_seed = cfg.base_seed;
    c.attempt_cap_factor = cap;
    return c;
  };

  if (const auto* common = doc.get("common_opponent")) {
    cfg.common_opponent = common->value<std::string>();
    if (!cfg.common_opponent) throw ConfigError("common_opponent must be a string");
    const auto* games = doc.get("games");
    if (games == nullptr || !games->is_array()) {
      throw ConfigError("common_opponent needs a 'games' array");
    }
    for (const auto& g : *games->as_array()) {
      auto name = g.value<std::string>();
      if (!name) throw ConfigError("games must be strings");
      const GameId game = ParseGameId(*name);
      for (const auto& [id, spec] : cfg.agents) {
        if (id != *cfg.common_opponent) cfg.competitions.push_back(make(game, id, *cfg.common_opponent));
      }
    }
  }
  if (const auto* list = doc.get("competitions")) {
    const auto* arr = list->as_array();
    if (arr == nullptr) throw ConfigError("competitions must be an array of tables");
    for (const auto& node : *arr) {
      const auto& t = config_internal::Table(node, "competition");
      const std::string game = Get<std::string>(t, "game", "", "competition");
      CompetitionConfig c = make(ParseGameId(game), Get<std::string>(t, "a", "", "competition"),
                                 Get<std::string>(t, "b", "", "competition"));
      c.id = Get<std::string>(t, "id", c.id, "competition");
      c.valid_matches_target = Get(t, "valid_matches_target", c.valid_matches_target, c.id);
      c.alternate_first_player = Get(t, "alternate_first_player", c.alternate_first_player, c.id);
      c.base_seed = Get<std::uint64_t>(t, "base_seed", c.base_seed, c.id);
      c.attempt_cap_factor = Get(t, "attempt_cap_factor", c.attempt_cap_factor, c.id);
      cfg.competitions.push_back(std::move(c));
    }
  }
  cfg.Validate();
  return cfg;
}

inline TournamentConfig LoadTournamentConfig(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config not found: " + path.string());
  toml::table doc;
  try {
    doc = toml::parse_file(path.string());
  } catch (const toml::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " +
                      std::string(e.description()));
  }
  return ParseTournamentConfig(doc, path.parent_path());
}

inline TournamentConfig ParseTournamentConfigString(std::string_view text) {
  try {
    return ParseTournamentConfig(toml::parse(text));
  } catch (const toml::parse_error& e) {
    throw ConfigError("config parse error: " + std::string(e.description()));
  }
}

}  // namespace gamearena

#endif  // GAMEARENA_ORCHESTRATOR_CONFIG_HPP_
