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

#ifndef GAMEARENA_GAMES_TICTACTOE_HPP_
#define GAMEARENA_GAMES_TICTACTOE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"

namespace gamearena::games {

// 3x3 Tic-Tac-Toe. Player 0 places X and moves first. Moves are <CxRy> with
// column x and row y in 1..3.
struct TicTacToe {
  static constexpr GameSpec kSpec{GameId::kTicTacToe, TurnMode::kSequential, 2,
                                  /*zero_sum=*/true, /*has_chance=*/false,
                                  /*first_player_advantage=*/true};
  static constexpr int kSize = 3;

  struct Move {
    int col = 1;
    int row = 1;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 9> cells;  // -1 empty, else the owning player
    int to_move = 0;
    std::optional<int> winner;
    bool full = false;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static int Index(int col, int row) { return (row - 1) * kSize + (col - 1); }

  static Position Initial(std::uint64_t /*seed*/) {
    Position pos;
    pos.cells.fill(-1);
    return pos;
  }

  static bool IsTerminal(const Position& pos) {
    return pos.winner.has_value() || pos.full;
  }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int /*player*/) {
    std::vector<Move> moves;
    for (int col = 1; col <= kSize; ++col) {
      for (int row = 1; row <= kSize; ++row) {
        if (pos.cells[Index(col, row)] < 0) moves.push_back({col, row});
      }
    }
    return moves;
  }

  static std::optional<int> LineOwner(const std::array<int, 9>& cells) {
    static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                         {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                         {0, 4, 8}, {2, 4, 6}};
    for (const auto& line : kLines) {
      int owner = cells[line[0]];
      if (owner >= 0 && owner == cells[line[1]] && owner == cells[line[2]]) {
        return owner;
      }
    }
    return std::nullopt;
  }

  static Position Apply(const Position& pos, const Move& move,
                        std::uint64_t /*seed*/) {
    Position next = pos;
    next.cells[Index(move.col, move.row)] = pos.to_move;
    next.winner = LineOwner(next.cells);
    next.full = true;
    for (int c : next.cells) next.full = next.full && c >= 0;
    next.to_move = Opponent(pos.to_move);
    return next;
  }

  static Outcome Result(const Position& pos) {
    if (pos.winner) return WinFor(*pos.winner);
    return DrawOutcome();
  }

  static std::string Render(const Move& m) {
    return "<C" + std::to_string(m.col) + "R" + std::to_string(m.row) + ">";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (!Consume(s, "<C")) return std::nullopt;
    auto col = ConsumeInt(s);
    if (!col || !Consume(s, "R")) return std::nullopt;
    auto row = ConsumeInt(s);
    if (!row || s != ">") return std::nullopt;
    if (*col < 1 || *col > kSize || *row < 1 || *row > kSize) {
      return std::nullopt;
    }
    return Move{*col, *row};
  }

  static void Observe(const Position&, int player, const History& history,
                      ObservationView& view) {
    AddMoveLists(history, player, view);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_TICTACTOE_HPP_
