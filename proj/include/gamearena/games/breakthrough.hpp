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

#ifndef GAMEARENA_GAMES_BREAKTHROUGH_HPP_
#define GAMEARENA_GAMES_BREAKTHROUGH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"

namespace gamearena::games {

// Breakthrough on a 3-column (a..c) by 8-row board. Player 0 is white,
// starts on rows 1-2 and moves up; player 1 is black, starts on rows 7-8 and
// moves down. Moves are <b2->b3>, captures carry a trailing star: <b2->c3*>.
// A side to move with no legal move loses.
struct Breakthrough {
  static constexpr GameSpec kSpec{GameId::kBreakthrough, TurnMode::kSequential,
                                  2, /*zero_sum=*/true, /*has_chance=*/false,
                                  /*first_player_advantage=*/false};
  static constexpr int kCols = 3;
  static constexpr int kRows = 8;
  static constexpr int kEmpty = -1;

  struct Move {
    int from_col = 0;  // 0-based, 'a' == 0
    int from_row = 0;  // 0-based, row 1 == 0
    int to_col = 0;
    int to_row = 0;
    bool capture = false;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<std::array<int, kCols>, kRows> cells;  // [row][col]
    std::array<int, 2> pieces{};
    int to_move = 0;
    std::optional<int> winner;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static constexpr int Direction(int player) { return player == 0 ? 1 : -1; }
  static constexpr int GoalRow(int player) { return player == 0 ? kRows - 1 : 0; }

  static Position Initial(std::uint64_t /*seed*/) {
    Position pos;
    for (int r = 0; r < kRows; ++r) {
      for (int c = 0; c < kCols; ++c) {
        pos.cells[r][c] = r < 2 ? 0 : (r >= kRows - 2 ? 1 : kEmpty);
      }
    }
    pos.pieces = {2 * kCols, 2 * kCols};
    return pos;
  }

  static std::vector<Move> MovesFor(const Position& pos, int player) {
    std::vector<Move> moves;
    const int dr = Direction(player);
    for (int r = 0; r < kRows; ++r) {
      for (int c = 0; c < kCols; ++c) {
        if (pos.cells[r][c] != player) continue;
        const int tr = r + dr;
        if (tr < 0 || tr >= kRows) continue;
        for (int dc : {-1, 0, 1}) {
          const int tc = c + dc;
          if (tc < 0 || tc >= kCols) continue;
          const int target = pos.cells[tr][tc];
          if (target == kEmpty) {
            moves.push_back({c, r, tc, tr, false});
          } else if (dc != 0 && target == Opponent(player)) {
            moves.push_back({c, r, tc, tr, true});
          }
        }
      }
    }
    return moves;
  }

  static bool IsTerminal(const Position& pos) { return pos.winner.has_value(); }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int player) {
    return MovesFor(pos, player);
  }

  static Position Apply(const Position& pos, const Move& m,
                        std::uint64_t /*seed*/) {
    Position next = pos;
    const int mover = pos.to_move;
    if (m.capture) --next.pieces[Opponent(mover)];
    next.cells[m.from_row][m.from_col] = kEmpty;
    next.cells[m.to_row][m.to_col] = mover;
    next.to_move = Opponent(mover);
    if (m.to_row == GoalRow(mover) || next.pieces[Opponent(mover)] == 0) {
      next.winner = mover;
    } else if (MovesFor(next, next.to_move).empty()) {
      next.winner = mover;
    }
    return next;
  }

  static Outcome Result(const Position& pos) { return WinFor(*pos.winner); }

  // A capture typed without its star names the same move; the star is
  // restored so the action matches the legal list.
  static Move Canonicalize(const Position& pos, Move m) {
    if (!m.capture && m.to_row >= 0 && m.to_row < kRows && m.to_col >= 0 &&
        m.to_col < kCols && m.from_col != m.to_col &&
        pos.cells[m.to_row][m.to_col] == Opponent(pos.to_move)) {
      m.capture = true;
    }
    return m;
  }

  static std::string Square(int col, int row) {
    return std::string(1, static_cast<char>('a' + col)) + std::to_string(row + 1);
  }

  static std::string Render(const Move& m) {
    return "<" + Square(m.from_col, m.from_row) + "->" +
           Square(m.to_col, m.to_row) + (m.capture ? "*" : "") + ">";
  }

  static std::optional<Move> Parse(std::string_view s) {
    auto square = [&](int& col, int& row) {
      if (s.empty() || s[0] < 'a' || s[0] >= 'a' + kCols) return false;
      col = s[0] - 'a';
      s.remove_prefix(1);
      auto r = ConsumeInt(s);
      if (!r || *r < 1 || *r > kRows) return false;
      row = *r - 1;
      return true;
    };
    Move m;
    if (!Consume(s, "<") || !square(m.from_col, m.from_row) ||
        !Consume(s, "->") || !square(m.to_col, m.to_row)) {
      return std::nullopt;
    }
    m.capture = Consume(s, "*");
    if (s != ">") return std::nullopt;
    return m;
  }

  // Rows from 8 down to 1, each prefixed by its index, then the column
  // letters.
  static std::string BoardPreview(const Position& pos) {
    std::string out;
    for (int r = kRows - 1; r >= 0; --r) {
      out += std::to_string(r + 1);
      for (int c = 0; c < kCols; ++c) {
        const int cell = pos.cells[r][c];
        out += cell == 0 ? 'w' : (cell == 1 ? 'b' : '.');
      }
      out += '\n';
    }
    out += " abc";
    return out;
  }

  static void Observe(const Position& pos, int player, const History& history,
                      ObservationView& view) {
    view.variables["board_preview"] = BoardPreview(pos);
    view.variables["color"] = player == 0 ? "white" : "black";
    AddMoveLists(history, player, view);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_BREAKTHROUGH_HPP_
