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

#ifndef GAMEARENA_TYPES_HPP_
#define GAMEARENA_TYPES_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gamearena {

// Errors -------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An action that is not in the legal set, or a joint/single arity mismatch.
class IllegalActionError : public Error {
 public:
  using Error::Error;
};

// Precondition violations: querying legal actions on a terminal state,
// outcome on a non-terminal state, and so on.
class StateError : public Error {
 public:
  using Error::Error;
};

// Games --------------------------------------------------------------------

enum class GameId {
  kTicTacToe,
  kConnectFour,
  kBreakthrough,
  kKuhnPoker,
  kLiarsDice,
  kBlindAuction,
  kNegotiation,
  kNim,
  kPig,
  kPrisonersDilemma,
};

inline constexpr std::array<GameId, 10> kAllGames = {
    GameId::kTicTacToe,  GameId::kConnectFour, GameId::kBreakthrough,
    GameId::kKuhnPoker,  GameId::kLiarsDice,   GameId::kBlindAuction,
    GameId::kNegotiation, GameId::kNim,        GameId::kPig,
    GameId::kPrisonersDilemma,
};

inline constexpr std::string_view GameName(GameId id) {
  switch (id) {
    case GameId::kTicTacToe: return "tictactoe";
    case GameId::kConnectFour: return "connect4";
    case GameId::kBreakthrough: return "breakthrough";
    case GameId::kKuhnPoker: return "kuhn_poker";
    case GameId::kLiarsDice: return "liars_dice";
    case GameId::kBlindAuction: return "blind_auction";
    case GameId::kNegotiation: return "negotiation";
    case GameId::kNim: return "nim";
    case GameId::kPig: return "pig";
    case GameId::kPrisonersDilemma: return "prisoners_dilemma";
  }
  return "unknown";
}

inline GameId ParseGameId(std::string_view name) {
  for (GameId id : kAllGames) {
    if (GameName(id) == name) return id;
  }
  static const std::map<std::string, GameId, std::less<>> kAliases = {
      {"tic_tac_toe", GameId::kTicTacToe},
      {"connect_four", GameId::kConnectFour},
      {"kuhn", GameId::kKuhnPoker},
      {"liars_dice", GameId::kLiarsDice},
      {"auction", GameId::kBlindAuction},
      {"ipd", GameId::kPrisonersDilemma},
      {"iterated_prisoners_dilemma", GameId::kPrisonersDilemma},
  };
  if (auto it = kAliases.find(name); it != kAliases.end()) return it->second;
  throw Error("unknown game: " + std::string(name));
}

enum class TurnMode { kSequential, kSimultaneous };

struct GameSpec {
  GameId game_id;
  TurnMode turn_mode;
  int num_players = 2;
  bool zero_sum;
  bool has_chance;
  bool first_player_advantage;  // metadata only
};

// Player indices. Chance events are resolved inside Apply from the state's
// seeded substreams, so a chance node is never exposed as the player to move.
inline constexpr int kSimultaneousPlayer = -2;
inline constexpr int kTerminalPlayer = -4;

inline constexpr int Opponent(int player) { return 1 - player; }

// Outcome ------------------------------------------------------------------

struct Outcome {
  std::array<double, 2> returns{0.0, 0.0};
  std::optional<int> winner;
  bool draw = false;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline Outcome WinFor(int winner, double stake = 1.0) {
  Outcome o;
  o.returns[winner] = stake;
  o.returns[Opponent(winner)] = -stake;
  o.winner = winner;
  return o;
}

inline Outcome DrawOutcome() {
  Outcome o;
  o.draw = true;
  return o;
}

// History and observations --------------------------------------------------

struct HistoryEntry {
  int player;
  std::string surface;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

using History = std::vector<HistoryEntry>;

// Named template variables for one player's information set.
struct ObservationView {
  int player = 0;
  std::map<std::string, std::string> variables;
};

}  // namespace gamearena

#endif  // GAMEARENA_TYPES_HPP_
