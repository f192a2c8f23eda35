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

#ifndef GAMEARENA_GAMES_PIG_HPP_
#define GAMEARENA_GAMES_PIG_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"
#include "gamearena/rng.hpp"

namespace gamearena::games {

// Pig to 100. <roll> draws a fair d6 from the match's "pig.roll" substream:
// a 1 wipes the turn total and passes the turn, 2..6 add to it. <stop> banks
// the turn total and passes the turn. Returns are a win indicator (1, 0).
struct Pig {
  static constexpr GameSpec kSpec{GameId::kPig, TurnMode::kSequential, 2,
                                  /*zero_sum=*/false, /*has_chance=*/true,
                                  /*first_player_advantage=*/false};
  static constexpr int kTarget = 100;

  struct Move {
    bool roll = true;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 2> scores{};
    int turn_total = 0;
    int to_move = 0;
    std::uint64_t rolls = 0;  // chance draws consumed so far
    int last_roll = 0;
    std::optional<int> winner;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static Position Initial(std::uint64_t) { return {}; }

  static Position With(std::array<int, 2> scores, int turn_total, int to_move) {
    Position pos;
    pos.scores = scores;
    pos.turn_total = turn_total;
    pos.to_move = to_move;
    return pos;
  }

  static bool IsTerminal(const Position& pos) { return pos.winner.has_value(); }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position&, int) {
    return {Move{true}, Move{false}};
  }

  static int RollFace(std::uint64_t seed, std::uint64_t index) {
    return ChanceUniform(seed, "pig.roll", index, 1, 6);
  }

  static Position Apply(const Position& pos, const Move& m, std::uint64_t seed) {
    Position next = pos;
    const int p = pos.to_move;
    if (m.roll) {
      const int face = RollFace(seed, pos.rolls);
      ++next.rolls;
      next.last_roll = face;
      if (face == 1) {
        next.turn_total = 0;
        next.to_move = Opponent(p);
      } else {
        next.turn_total += face;
      }
    } else {
      next.scores[p] += pos.turn_total;
      next.turn_total = 0;
      if (next.scores[p] >= kTarget) {
        next.winner = p;
      } else {
        next.to_move = Opponent(p);
      }
    }
    return next;
  }

  static Outcome Result(const Position& pos) {
    Outcome o;
    o.returns[*pos.winner] = 1.0;
    o.winner = pos.winner;
    return o;
  }

  // Value of a search state cut off before the end: sign of the banked-score
  // difference mapped onto the win-indicator scale.
  static std::array<double, 2> CutoffReturns(const Position& pos) {
    if (pos.scores[0] == pos.scores[1]) return {0.5, 0.5};
    return pos.scores[0] > pos.scores[1] ? std::array<double, 2>{1.0, 0.0}
                                         : std::array<double, 2>{0.0, 1.0};
  }

  static std::string Render(const Move& m) { return m.roll ? "<roll>" : "<stop>"; }

  static std::optional<Move> Parse(std::string_view s) {
    if (s == "<roll>") return Move{true};
    if (s == "<stop>") return Move{false};
    return std::nullopt;
  }

  static void Observe(const Position& pos, int player, const History& /*history*/,
                      ObservationView& view) {
    view.variables["agent_current_score"] = std::to_string(pos.scores[player]);
    view.variables["opponent_current_score"] =
        std::to_string(pos.scores[Opponent(player)]);
    view.variables["turn_total_score"] =
        std::to_string(pos.to_move == player ? pos.turn_total : 0);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_PIG_HPP_
