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

#ifndef GAMEARENA_GAMES_NIM_HPP_
#define GAMEARENA_GAMES_NIM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"

namespace gamearena::games {

// Misère Nim on piles (1, 3, 5, 7): whoever takes the last match loses.
struct Nim {
  static constexpr GameSpec kSpec{GameId::kNim, TurnMode::kSequential, 2,
                                  /*zero_sum=*/true, /*has_chance=*/false,
                                  /*first_player_advantage=*/true};
  static constexpr std::array<int, 4> kInitialPiles = {1, 3, 5, 7};

  struct Move {
    int pile = 1;  // 1-based
    int take = 1;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 4> piles = kInitialPiles;
    int to_move = 0;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static Position Initial(std::uint64_t) { return {}; }

  static Position WithPiles(std::array<int, 4> piles, int to_move = 0) {
    return {piles, to_move};
  }

  static int Total(const Position& pos) {
    return pos.piles[0] + pos.piles[1] + pos.piles[2] + pos.piles[3];
  }

  static bool IsTerminal(const Position& pos) { return Total(pos) == 0; }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int) {
    std::vector<Move> moves;
    for (int p = 0; p < 4; ++p) {
      for (int t = 1; t <= pos.piles[p]; ++t) moves.push_back({p + 1, t});
    }
    return moves;
  }

  static Position Apply(const Position& pos, const Move& m, std::uint64_t) {
    Position next = pos;
    next.piles[m.pile - 1] -= m.take;
    next.to_move = Opponent(pos.to_move);
    return next;
  }

  // The player who emptied the board moved last and loses; it is now the
  // winner's turn.
  static Outcome Result(const Position& pos) { return WinFor(pos.to_move); }

  static std::string Render(const Move& m) {
    return "<pile:" + std::to_string(m.pile) + ", take:" +
           std::to_string(m.take) + ">";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (!Consume(s, "<pile:")) return std::nullopt;
    auto pile = ConsumeInt(s);
    if (!pile || !Consume(s, ", take:")) return std::nullopt;
    auto take = ConsumeInt(s);
    if (!take || s != ">") return std::nullopt;
    if (*pile < 1 || *pile > 4 || *take < 1) return std::nullopt;
    return Move{*pile, *take};
  }

  static void Observe(const Position& pos, int player, const History& /*history*/,
                      ObservationView& view) {
    for (int p = 0; p < 4; ++p) {
      view.variables["piles[" + std::to_string(p) + "]"] =
          std::to_string(pos.piles[p]);
    }
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_NIM_HPP_
