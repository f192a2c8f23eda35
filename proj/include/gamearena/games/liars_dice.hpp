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

#ifndef GAMEARENA_GAMES_LIARS_DICE_HPP_
#define GAMEARENA_GAMES_LIARS_DICE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"
#include "gamearena/rng.hpp"

namespace gamearena::games {

// Two-player Liar's Dice, one die each, no wild faces. Bids are ordered by
// quantity then face; <Liar> challenges the standing bid.
struct LiarsDice {
  static constexpr GameSpec kSpec{GameId::kLiarsDice, TurnMode::kSequential, 2,
                                  /*zero_sum=*/true, /*has_chance=*/true,
                                  /*first_player_advantage=*/false};
  static constexpr int kMaxQuantity = 2;
  static constexpr int kFaces = 6;

  struct Bid {
    int quantity = 1;
    int face = 1;
    friend bool operator==(const Bid&, const Bid&) = default;
    // Strict bid ordering: higher quantity, or same quantity and higher face.
    friend bool operator>(const Bid& a, const Bid& b) {
      return a.quantity > b.quantity ||
             (a.quantity == b.quantity && a.face > b.face);
    }
  };

  struct Move {
    bool liar = false;
    Bid bid;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 2> dice{};
    std::optional<Bid> standing;
    int last_bidder = -1;
    int to_move = 0;
    bool challenged = false;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static Position Initial(std::uint64_t seed) {
    Position pos;
    for (int p = 0; p < 2; ++p) {
      pos.dice[p] = ChanceUniform(seed, "liars_dice.die", p, 1, kFaces);
    }
    return pos;
  }

  static bool IsTerminal(const Position& pos) { return pos.challenged; }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int) {
    std::vector<Move> moves;
    for (int q = 1; q <= kMaxQuantity; ++q) {
      for (int f = 1; f <= kFaces; ++f) {
        Bid bid{q, f};
        if (!pos.standing || bid > *pos.standing) moves.push_back({false, bid});
      }
    }
    if (pos.standing) moves.push_back({true, {}});
    return moves;
  }

  static Position Apply(const Position& pos, const Move& m, std::uint64_t) {
    Position next = pos;
    if (m.liar) {
      next.challenged = true;
    } else {
      next.standing = m.bid;
      next.last_bidder = pos.to_move;
    }
    next.to_move = Opponent(pos.to_move);
    return next;
  }

  static Outcome Result(const Position& pos) {
    int count = 0;
    for (int d : pos.dice) count += d == pos.standing->face ? 1 : 0;
    const int bidder = pos.last_bidder;
    return WinFor(count >= pos.standing->quantity ? bidder : Opponent(bidder));
  }

  static std::string Render(const Move& m) {
    if (m.liar) return "<Liar>";
    return "<" + std::to_string(m.bid.quantity) + " dices, " +
           std::to_string(m.bid.face) + " value>";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (s == "<Liar>") return Move{true, {}};
    if (!Consume(s, "<")) return std::nullopt;
    auto q = ConsumeInt(s);
    if (!q || !Consume(s, " dices, ")) return std::nullopt;
    auto f = ConsumeInt(s);
    if (!f || s != " value>") return std::nullopt;
    if (*q < 1 || *q > kMaxQuantity || *f < 1 || *f > kFaces) return std::nullopt;
    return Move{false, {*q, *f}};
  }

  static Position Determinize(const Position& pos, int player, Rng& rng) {
    Position next = pos;
    next.dice[Opponent(player)] = rng.Uniform(1, kFaces);
    return next;
  }

  static void Observe(const Position& pos, int player, const History& history,
                      ObservationView& view) {
    view.variables["face_value"] = std::to_string(pos.dice[player]);
    std::string last = "none";
    for (auto it = history.rbegin(); it != history.rend(); ++it) {
      if (it->player != player) {
        last = it->surface;
        break;
      }
    }
    view.variables["opponent_last_action"] = last;
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_LIARS_DICE_HPP_
