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

#ifndef GAMEARENA_MATCH_HPP_
#define GAMEARENA_MATCH_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamearena/game_state.hpp"
#include "json.hpp"

namespace gamearena {

// Raised by agents whose backend could not produce a generation. The match
// is recorded as invalid with cause "agent transport".
class AgentTransportError : public Error {
 public:
  using Error::Error;
};

// Raised when an agent exceeds its per-move wall-clock budget.
class AgentTimeoutError : public Error {
 public:
  using Error::Error;
};

namespace causes {
inline constexpr std::string_view kIllegalAction = "illegal action";
inline constexpr std::string_view kNoActionFound = "no action found";
inline constexpr std::string_view kMalformedAction = "malformed action";
inline constexpr std::string_view kTransport = "agent transport";
inline constexpr std::string_view kTimeout = "agent timeout";
inline constexpr std::string_view kPlyLimit = "ply limit";
}  // namespace causes

// What an agent produced for one decision. `action` is empty when nothing
// usable was produced; `failure` then names the cause.
struct AgentDecision {
  std::optional<ActionToken> action;
  std::string raw_action;  // surface as emitted, for the log
  std::optional<std::string> prompt;
  std::optional<std::string> generation;
  std::string failure;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string id() const = 0;
  // Called only when state.CanAct(player). Implementations must restrict
  // themselves to `player`'s information set (Observe, or Determinize for
  // search).
  virtual AgentDecision Act(const GameState& state, int player) = 0;
};

struct TurnRecord {
  int player = 0;
  std::optional<std::string> prompt;
  std::optional<std::string> generation;
  std::string action;
  bool legal = true;

  friend bool operator==(const TurnRecord&, const TurnRecord&) = default;
};

struct MatchRecord {
  std::string game;
  std::uint64_t seed = 0;
  std::array<std::string, 2> agents;  // seat order: agents[p] plays player p
  std::vector<TurnRecord> turns;
  std::optional<Outcome> outcome;  // absent for invalid matches
  bool valid = false;
  std::optional<std::string> invalid_cause;
  // Placement within a competition; written so logs can be replayed in
  // chronological order.
  std::optional<std::string> competition;
  std::optional<int> index;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

struct RunOptions {
  MatchOptions match;
  // Guards against agent pairs that never end a game (e.g. two Pig agents
  // that always stop on zero).
  int max_plies = 10000;
};

namespace internal {

inline std::optional<std::string> CheckDecision(const GameState& state,
                                                int player,
                                                AgentDecision& decision,
                                                TurnRecord& turn) {
  turn.player = player;
  turn.prompt = decision.prompt;
  turn.generation = decision.generation;
  if (!decision.action) {
    turn.action = decision.raw_action;
    turn.legal = false;
    return decision.failure.empty() ? std::string(causes::kNoActionFound)
                                    : decision.failure;
  }
  ActionToken action = Canonicalize(state, *decision.action);
  turn.action = action.surface;
  if (!IsLegal(state, player, action)) {
    turn.legal = false;
    return std::string(causes::kIllegalAction);
  }
  decision.action = std::move(action);
  return std::nullopt;
}

inline AgentDecision Ask(Agent& agent, const GameState& state, int player,
                         std::optional<std::string>& failure) {
  try {
    return agent.Act(state, player);
  } catch (const AgentTimeoutError&) {
    failure = std::string(causes::kTimeout);
  } catch (const AgentTransportError&) {
    failure = std::string(causes::kTransport);
  }
  return {};
}

}  // namespace internal

// Drives one match: observe -> act -> apply until terminal or the first
// invalid decision. Simultaneous turns collect both decisions on the same
// pre-state before the joint action is applied.
inline MatchRecord RunMatch(GameId game, std::array<Agent*, 2> agents,
                            std::uint64_t seed, const RunOptions& options = {}) {
  MatchRecord record;
  record.game = std::string(GameName(game));
  record.seed = seed;
  record.agents = {agents[0]->id(), agents[1]->id()};

  auto invalidate = [&](std::string cause) {
    record.valid = false;
    record.invalid_cause = std::move(cause);
    return record;
  };

  GameState state = NewMatch(game, seed, options.match);
  int plies = 0;
  while (!state.IsTerminal()) {
    if (++plies > options.max_plies) return invalidate(std::string(causes::kPlyLimit));
    if (state.IsSimultaneous()) {
      std::array<AgentDecision, 2> decisions;
      for (int p = 0; p < 2; ++p) {
        std::optional<std::string> failure;
        decisions[p] = internal::Ask(*agents[p], state, p, failure);
        if (failure) return invalidate(*failure);
      }
      std::optional<std::string> cause;
      for (int p = 0; p < 2; ++p) {
        TurnRecord turn;
        auto c = internal::CheckDecision(state, p, decisions[p], turn);
        record.turns.push_back(std::move(turn));
        if (c && !cause) cause = c;
      }
      if (cause) return invalidate(*cause);
      state = ApplyJoint(state, *decisions[0].action, *decisions[1].action);
    } else {
      const int p = state.CurrentPlayer();
      std::optional<std::string> failure;
      AgentDecision decision = internal::Ask(*agents[p], state, p, failure);
      if (failure) return invalidate(*failure);
      TurnRecord turn;
      auto cause = internal::CheckDecision(state, p, decision, turn);
      record.turns.push_back(std::move(turn));
      if (cause) return invalidate(*cause);
      state = Apply(state, *decision.action);
    }
  }
  record.outcome = GetOutcome(state);
  record.valid = true;
  return record;
}

// Rebuilds the terminal state of a valid record from its seed and actions.
inline GameState ReplayRecord(const MatchRecord& record,
                              const MatchOptions& options = {}) {
  GameState state = NewMatch(ParseGameId(record.game), record.seed, options);
  const GameId game = state.game();
  std::size_t i = 0;
  auto token = [&](std::size_t k) {
    auto t = ParseSurface(game, record.turns.at(k).action);
    if (!t) throw Error("unparseable action in record: " + record.turns[k].action);
    return *t;
  };
  while (!state.IsTerminal() && i < record.turns.size()) {
    if (state.IsSimultaneous()) {
      state = ApplyJoint(state, token(i), token(i + 1));
      i += 2;
    } else {
      state = Apply(state, token(i));
      ++i;
    }
  }
  return state;
}

// JSONL ---------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json ToJson(const Outcome& o) {
  Json j;
  j["returns"] = {o.returns[0], o.returns[1]};
  j["winner"] = o.winner ? Json(*o.winner) : Json(nullptr);
  j["draw"] = o.draw;
  return j;
}

inline Outcome OutcomeFromJson(const Json& j) {
  Outcome o;
  o.returns = {j.at("returns").at(0).get<double>(),
               j.at("returns").at(1).get<double>()};
  if (!j.at("winner").is_null()) o.winner = j.at("winner").get<int>();
  o.draw = j.at("draw").get<bool>();
  return o;
}

inline Json ToJson(const MatchRecord& r) {
  Json j;
  j["game"] = r.game;
  j["seed"] = r.seed;
  j["agents"] = {r.agents[0], r.agents[1]};
  Json turns = Json::array();
  for (const auto& t : r.turns) {
    Json tj;
    tj["player"] = t.player;
    if (t.prompt) tj["prompt"] = *t.prompt;
    if (t.generation) tj["generation"] = *t.generation;
    tj["action"] = t.action;
    tj["legal"] = t.legal;
    turns.push_back(std::move(tj));
  }
  j["turns"] = std::move(turns);
  j["outcome"] = r.outcome ? ToJson(*r.outcome) : Json(nullptr);
  j["valid"] = r.valid;
  if (r.invalid_cause) j["invalid_cause"] = *r.invalid_cause;
  if (r.competition) j["competition"] = *r.competition;
  if (r.index) j["index"] = *r.index;
  return j;
}

inline MatchRecord RecordFromJson(const Json& j) {
  MatchRecord r;
  r.game = j.at("game").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.agents = {j.at("agents").at(0).get<std::string>(),
              j.at("agents").at(1).get<std::string>()};
  for (const auto& tj : j.at("turns")) {
    TurnRecord t;
    t.player = tj.at("player").get<int>();
    if (tj.contains("prompt")) t.prompt = tj["prompt"].get<std::string>();
    if (tj.contains("generation")) t.generation = tj["generation"].get<std::string>();
    t.action = tj.at("action").get<std::string>();
    t.legal = tj.at("legal").get<bool>();
    r.turns.push_back(std::move(t));
  }
  if (!j.at("outcome").is_null()) r.outcome = OutcomeFromJson(j["outcome"]);
  r.valid = j.at("valid").get<bool>();
  if (j.contains("invalid_cause")) r.invalid_cause = j["invalid_cause"].get<std::string>();
  if (j.contains("competition")) r.competition = j["competition"].get<std::string>();
  if (j.contains("index")) r.index = j["index"].get<int>();
  return r;
}

inline std::string ToJsonLine(const MatchRecord& r) { return ToJson(r).dump() + "\n"; }

inline MatchRecord RecordFromJsonLine(std::string_view line) {
  return RecordFromJson(Json::parse(line));
}

}  // namespace gamearena

#endif  // GAMEARENA_MATCH_HPP_
