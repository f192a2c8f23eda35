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

#ifndef GAMEARENA_GAMES_CONNECT_FOUR_HPP_
#define GAMEARENA_GAMES_CONNECT_FOUR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"

namespace gamearena::games {

// Connect Four on a 6-row, 7-column grid. Row 0 is the floor.
struct ConnectFour {
  static constexpr GameSpec kSpec{GameId::kConnectFour, TurnMode::kSequential,
                                  2, /*zero_sum=*/true, /*has_chance=*/false,
                                  /*first_player_advantage=*/true};
  static constexpr int kRows = 6;
  static constexpr int kCols = 7;

  struct Move {
    int col = 1;  // 1-based
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<std::array<int, kCols>, kRows> cells;  // [row][col], -1 empty
    std::array<int, kCols> heights{};
    int to_move = 0;
    int discs = 0;
    std::optional<int> winner;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static Position Initial(std::uint64_t /*seed*/) {
    Position pos;
    for (auto& row : pos.cells) row.fill(-1);
    return pos;
  }

  static bool IsTerminal(const Position& pos) {
    return pos.winner.has_value() || pos.discs == kRows * kCols;
  }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int /*player*/) {
    std::vector<Move> moves;
    for (int c = 0; c < kCols; ++c) {
      if (pos.heights[c] < kRows) moves.push_back({c + 1});
    }
    return moves;
  }

  // True if the disc at (row, col) completes a line of four.
  static bool MakesFour(const Position& pos, int row, int col) {
    const int owner = pos.cells[row][col];
    static constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
    for (const auto& d : kDirs) {
      int count = 1;
      for (int sign : {1, -1}) {
        int r = row + sign * d[0];
        int c = col + sign * d[1];
        while (r >= 0 && r < kRows && c >= 0 && c < kCols &&
               pos.cells[r][c] == owner) {
          ++count;
          r += sign * d[0];
          c += sign * d[1];
        }
      }
      if (count >= 4) return true;
    }
    return false;
  }

  static Position Apply(const Position& pos, const Move& move,
                        std::uint64_t /*seed*/) {
    Position next = pos;
    const int c = move.col - 1;
    const int r = next.heights[c]++;
    next.cells[r][c] = pos.to_move;
    ++next.discs;
    if (MakesFour(next, r, c)) next.winner = pos.to_move;
    next.to_move = Opponent(pos.to_move);
    return next;
  }

  static Outcome Result(const Position& pos) {
    if (pos.winner) return WinFor(*pos.winner);
    return DrawOutcome();
  }

  static std::string Render(const Move& m) {
    return "<C" + std::to_string(m.col) + ">";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (!Consume(s, "<C")) return std::nullopt;
    auto col = ConsumeInt(s);
    if (!col || s != ">" || *col < 1 || *col > kCols) return std::nullopt;
    return Move{*col};
  }

  static void Observe(const Position&, int player, const History& history,
                      ObservationView& view) {
    AddMoveLists(history, player, view);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_CONNECT_FOUR_HPP_
