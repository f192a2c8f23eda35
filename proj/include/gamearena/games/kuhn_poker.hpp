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

#ifndef GAMEARENA_GAMES_KUHN_POKER_HPP_
#define GAMEARENA_GAMES_KUHN_POKER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"
#include "gamearena/rng.hpp"

namespace gamearena::games {

// One-round Kuhn poker with antes of 1 and a single bet of 1. Player 0 acts
// first. Terminal betting sequences: PP, BP, BB, PBP, PBB.
struct KuhnPoker {
  static constexpr GameSpec kSpec{GameId::kKuhnPoker, TurnMode::kSequential, 2,
                                  /*zero_sum=*/true, /*has_chance=*/true,
                                  /*first_player_advantage=*/true};

  enum Card { kJack = 0, kQueen = 1, kKing = 2 };

  struct Move {
    bool bet = false;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 2> cards{};
    std::vector<bool> bets;  // betting sequence, true = Bet
    friend bool operator==(const Position&, const Position&) = default;
  };

  static constexpr std::array<std::array<int, 2>, 6> kDeals = {{
      {kJack, kQueen}, {kJack, kKing}, {kQueen, kJack},
      {kQueen, kKing}, {kKing, kJack}, {kKing, kQueen},
  }};

  static char CardName(int card) { return "JQK"[card]; }

  static Position Initial(std::uint64_t seed) {
    Position pos;
    pos.cards = kDeals[ChanceUniform(seed, "kuhn.deal", 0, 0, 5)];
    return pos;
  }

  static Position WithCards(std::array<int, 2> cards) {
    Position pos;
    pos.cards = cards;
    return pos;
  }

  static bool IsTerminal(const Position& pos) {
    const auto& b = pos.bets;
    if (b.size() == 2) return !(b[0] == false && b[1] == true);  // PB continues
    return b.size() == 3;
  }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer
                           : static_cast<int>(pos.bets.size() % 2);
  }

  static std::vector<Move> LegalMoves(const Position&, int) {
    return {Move{false}, Move{true}};
  }

  static Position Apply(const Position& pos, const Move& m, std::uint64_t) {
    Position next = pos;
    next.bets.push_back(m.bet);
    return next;
  }

  static Outcome Result(const Position& pos) {
    const auto& b = pos.bets;
    const int showdown_winner = pos.cards[0] > pos.cards[1] ? 0 : 1;
    // A pass directly after a bet folds: the bettor collects the ante.
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (b[i - 1] && !b[i]) {
        return WinFor(static_cast<int>((i - 1) % 2), 1.0);
      }
    }
    const bool called = b.back();
    return WinFor(showdown_winner, called ? 2.0 : 1.0);
  }

  static std::string Render(const Move& m) { return m.bet ? "<Bet>" : "<Pass>"; }

  static std::optional<Move> Parse(std::string_view s) {
    if (s == "<Bet>") return Move{true};
    if (s == "<Pass>") return Move{false};
    return std::nullopt;
  }

  // Replaces the opponent's card with one of the two cards this player does
  // not hold, uniformly.
  static Position Determinize(const Position& pos, int player, Rng& rng) {
    Position next = pos;
    int options[2];
    int n = 0;
    for (int c = 0; c < 3; ++c) {
      if (c != pos.cards[player]) options[n++] = c;
    }
    next.cards[Opponent(player)] = options[rng.Below(2)];
    return next;
  }

  static void Observe(const Position& pos, int player, const History& history,
                      ObservationView& view) {
    view.variables["card"] = std::string(1, CardName(pos.cards[player]));
    AddMoveLists(history, player, view);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_KUHN_POKER_HPP_
