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

#ifndef GAMEARENA_GAMES_BLIND_AUCTION_HPP_
#define GAMEARENA_GAMES_BLIND_AUCTION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"
#include "gamearena/rng.hpp"

namespace gamearena::games {

// Single-round first-price sealed-bid auction. Private integer valuations in
// [1, 10]; both bids arrive simultaneously; ties go to a seeded fair coin.
// Winner earns valuation - bid, loser earns 0.
struct BlindAuction {
  static constexpr GameSpec kSpec{GameId::kBlindAuction,
                                  TurnMode::kSimultaneous, 2,
                                  /*zero_sum=*/false, /*has_chance=*/true,
                                  /*first_player_advantage=*/false};
  static constexpr int kMinValuation = 1;
  static constexpr int kMaxValuation = 10;

  struct Move {
    int bid = 0;
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    std::array<int, 2> valuations{};
    std::optional<std::array<int, 2>> bids;
    int winner = -1;
    friend bool operator==(const Position&, const Position&) = default;
  };

  static Position Initial(std::uint64_t seed) {
    Position pos;
    for (int p = 0; p < 2; ++p) {
      pos.valuations[p] = ChanceUniform(seed, "auction.valuation", p,
                                        kMinValuation, kMaxValuation);
    }
    return pos;
  }

  static Position WithValuations(std::array<int, 2> valuations) {
    Position pos;
    pos.valuations = valuations;
    return pos;
  }

  static bool IsTerminal(const Position& pos) { return pos.bids.has_value(); }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : kSimultaneousPlayer;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int player) {
    std::vector<Move> moves;
    for (int b = 0; b <= pos.valuations[player]; ++b) moves.push_back({b});
    return moves;
  }

  static Position ApplyJoint(const Position& pos, const Move& m0,
                             const Move& m1, std::uint64_t seed) {
    Position next = pos;
    next.bids = std::array<int, 2>{m0.bid, m1.bid};
    if (m0.bid != m1.bid) {
      next.winner = m0.bid > m1.bid ? 0 : 1;
    } else {
      next.winner = ChanceUniform(seed, "auction.tie", 0, 0, 1);
    }
    return next;
  }

  static Outcome Result(const Position& pos) {
    Outcome o;
    o.returns[pos.winner] = pos.valuations[pos.winner] - (*pos.bids)[pos.winner];
    o.winner = pos.winner;
    return o;
  }

  static std::string Render(const Move& m) {
    return "<" + std::to_string(m.bid) + ">";
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (!Consume(s, "<")) return std::nullopt;
    auto b = ConsumeInt(s);
    if (!b || s != ">") return std::nullopt;
    return Move{*b};
  }

  static Position Determinize(const Position& pos, int player, Rng& rng) {
    Position next = pos;
    next.valuations[Opponent(player)] =
        rng.Uniform(kMinValuation, kMaxValuation);
    return next;
  }

  static void Observe(const Position& pos, int player, const History& /*history*/,
                      ObservationView& view) {
    view.variables["valuation"] = std::to_string(pos.valuations[player]);
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_BLIND_AUCTION_HPP_
