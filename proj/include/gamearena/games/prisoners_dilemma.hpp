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

#ifndef GAMEARENA_GAMES_PRISONERS_DILEMMA_HPP_
#define GAMEARENA_GAMES_PRISONERS_DILEMMA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"

namespace gamearena::games {

// Iterated Prisoner's Dilemma with simultaneous moves. Prison years are turned
// into rewards as 3 - years: (T,S) -> (3,0), (S,T) -> (0,3), (T,T) -> (1,1),
// (S,S) -> (2,2).
struct PrisonersDilemma {
  static constexpr GameSpec kSpec{GameId::kPrisonersDilemma,
                                  TurnMode::kSimultaneous, 2,
                                  /*zero_sum=*/false, /*has_chance=*/false,
                                  /*first_player_advantage=*/false};
  static constexpr int kDefaultRounds = 5;

  struct Move {
    bool testify = false;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    int rounds = kDefaultRounds;
    std::vector<std::array<Move, 2>> played;
    std::array<double, 2> totals{};
    friend bool operator==(const Position&, const Position&) = default;
  };

  static constexpr int Years(bool self_testify, bool other_testify) {
    if (self_testify) return other_testify ? 2 : 0;
    return other_testify ? 3 : 1;
  }

  static constexpr int Payoff(bool self_testify, bool other_testify) {
    return 3 - Years(self_testify, other_testify);
  }

  static Position Initial(std::uint64_t) { return {}; }

  static Position WithRounds(int rounds) {
    Position pos;
    pos.rounds = rounds;
    return pos;
  }

  static bool IsTerminal(const Position& pos) {
    return static_cast<int>(pos.played.size()) >= pos.rounds;
  }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : kSimultaneousPlayer;
  }

  static std::vector<Move> LegalMoves(const Position&, int) {
    return {Move{true}, Move{false}};
  }

  static Position ApplyJoint(const Position& pos, const Move& m0,
                             const Move& m1, std::uint64_t) {
    Position next = pos;
    next.played.push_back({m0, m1});
    next.totals[0] += Payoff(m0.testify, m1.testify);
    next.totals[1] += Payoff(m1.testify, m0.testify);
    return next;
  }

  static Outcome Result(const Position& pos) {
    Outcome o;
    o.returns = pos.totals;
    return o;
  }

  static std::string Render(const Move& m) {
    return m.testify ? "<Testify>" : "<Silent>";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (s == "<Testify>") return Move{true};
    if (s == "<Silent>") return Move{false};
    return std::nullopt;
  }

  static void Observe(const Position& pos, int player, const History& /*history*/,
                      ObservationView& view) {
    std::string lines;
    for (std::size_t i = 0; i < pos.played.size(); ++i) {
      if (i > 0) lines += '\n';
      lines += "In the " + std::to_string(i + 1) +
               " th round, you decided to " + Render(pos.played[i][player]) +
               " and your opponent decided to " +
               Render(pos.played[i][Opponent(player)]) + ".";
    }
    view.variables["history"] = lines.empty() ? "none" : lines;
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_PRISONERS_DILEMMA_HPP_
