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

#ifndef GAMEARENA_GAMES_NEGOTIATION_HPP_
#define GAMEARENA_GAMES_NEGOTIATION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamearena/games/common.hpp"
#include "gamearena/rng.hpp"

namespace gamearena::games {

// Multi-issue bargaining over peppers, strawberries and cherries.
//
// Each player turn is a proposal stage (a proposal, or <Agree> to the
// opponent's standing proposal) followed by an utterance stage (cheap talk
// with no payoff effect). Agreement gives the agreeing player the pool minus
// the opponent's proposal. Without agreement after kRoundCap player turns both
// players earn 0.
struct Negotiation {
  static constexpr GameSpec kSpec{GameId::kNegotiation, TurnMode::kSequential,
                                  2, /*zero_sum=*/false, /*has_chance=*/true,
                                  /*first_player_advantage=*/false};
  static constexpr int kItems = 3;
  static constexpr int kMaxPool = 5;
  static constexpr int kTotalValue = 10;
  static constexpr int kRoundCap = 10;

  using Items = std::array<int, kItems>;

  enum class Stage { kProposal, kUtterance };
  enum class Kind { kAgree, kProposal, kUtterance };

  struct Move {
    Kind kind = Kind::kAgree;
    Items take{};
    friend bool operator==(const Move&, const Move&) = default;
  };

  struct Position {
    Items pool{};
    std::array<Items, 2> values{};
    std::array<std::optional<Items>, 2> proposal;
    std::array<std::optional<Items>, 2> utterance;
    Stage stage = Stage::kProposal;
    int to_move = 0;
    int round = 0;
    bool agreed = false;
    std::array<Items, 2> allocation{};
    friend bool operator==(const Position&, const Position&) = default;
  };

  static int Dot(const Items& a, const Items& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  }

  // All non-negative integer value vectors with dot(values, pool) == 10.
  static std::vector<Items> ValueVectors(const Items& pool) {
    std::vector<Items> out;
    for (int a = 0; a * pool[0] <= kTotalValue; ++a) {
      for (int b = 0; a * pool[0] + b * pool[1] <= kTotalValue; ++b) {
        const int rest = kTotalValue - a * pool[0] - b * pool[1];
        if (rest % pool[2] == 0) out.push_back({a, b, rest / pool[2]});
      }
    }
    return out;
  }

  // Pools are redrawn until a value vector exists; values are then uniform
  // over the admissible vectors, independently per player.
  static Position Initial(std::uint64_t seed) {
    Position pos;
    for (std::uint64_t attempt = 0;; ++attempt) {
      for (int i = 0; i < kItems; ++i) {
        pos.pool[i] = ChanceUniform(seed, "negotiation.pool",
                                    attempt * kItems + i, 1, kMaxPool);
      }
      auto vectors = ValueVectors(pos.pool);
      if (vectors.empty()) continue;
      for (int p = 0; p < 2; ++p) {
        const int k = ChanceUniform(seed, "negotiation.values", attempt * 2 + p,
                                    0, static_cast<int>(vectors.size()) - 1);
        pos.values[p] = vectors[k];
      }
      return pos;
    }
  }

  static Position WithSetup(const Items& pool, const std::array<Items, 2>& values) {
    Position pos;
    pos.pool = pool;
    pos.values = values;
    return pos;
  }

  static bool IsTerminal(const Position& pos) {
    return pos.agreed || pos.round >= kRoundCap;
  }

  static int CurrentPlayer(const Position& pos) {
    return IsTerminal(pos) ? kTerminalPlayer : pos.to_move;
  }

  static std::vector<Move> LegalMoves(const Position& pos, int player) {
    std::vector<Move> moves;
    const bool proposal = pos.stage == Stage::kProposal;
    if (proposal && pos.proposal[Opponent(player)]) moves.push_back({});
    const Kind kind = proposal ? Kind::kProposal : Kind::kUtterance;
    for (int a = 0; a <= pos.pool[0]; ++a) {
      for (int b = 0; b <= pos.pool[1]; ++b) {
        for (int c = 0; c <= pos.pool[2]; ++c) moves.push_back({kind, {a, b, c}});
      }
    }
    return moves;
  }

  static Position Apply(const Position& pos, const Move& m, std::uint64_t) {
    Position next = pos;
    const int p = pos.to_move;
    switch (m.kind) {
      case Kind::kAgree: {
        const Items& theirs = *pos.proposal[Opponent(p)];
        next.allocation[Opponent(p)] = theirs;
        for (int i = 0; i < kItems; ++i) {
          next.allocation[p][i] = pos.pool[i] - theirs[i];
        }
        next.agreed = true;
        break;
      }
      case Kind::kProposal:
        next.proposal[p] = m.take;
        next.stage = Stage::kUtterance;
        break;
      case Kind::kUtterance:
        next.utterance[p] = m.take;
        next.stage = Stage::kProposal;
        next.to_move = Opponent(p);
        ++next.round;
        break;
    }
    return next;
  }

  static Outcome Result(const Position& pos) {
    Outcome o;
    if (pos.agreed) {
      for (int p = 0; p < 2; ++p) o.returns[p] = Dot(pos.values[p], pos.allocation[p]);
    }
    return o;
  }

  static std::string ItemList(const Items& t) {
    return "[" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
           std::to_string(t[2]) + "]";
  }

  static std::string Render(const Move& m) {
    switch (m.kind) {
      case Kind::kAgree: return "<Agree>";
      case Kind::kProposal: return "<Proposal: " + ItemList(m.take) + ">";
      case Kind::kUtterance: return "<Utterance: " + ItemList(m.take) + ">";
    }
    return {};
  }

  static std::optional<Move> Parse(std::string_view s) {
    if (s == "<Agree>") return Move{};
    Move m;
    if (Consume(s, "<Proposal: [")) {
      m.kind = Kind::kProposal;
    } else if (Consume(s, "<Utterance: [")) {
      m.kind = Kind::kUtterance;
    } else {
      return std::nullopt;
    }
    for (int i = 0; i < kItems; ++i) {
      if (i > 0 && !Consume(s, ", ")) return std::nullopt;
      auto v = ConsumeInt(s);
      if (!v) return std::nullopt;
      m.take[i] = *v;
    }
    if (s != "]>") return std::nullopt;
    return m;
  }

  static Position Determinize(const Position& pos, int player, Rng& rng) {
    Position next = pos;
    auto vectors = ValueVectors(pos.pool);
    next.values[Opponent(player)] = vectors[rng.Below(vectors.size())];
    return next;
  }

  static void Observe(const Position& pos, int player, const History& /*history*/,
                      ObservationView& view) {
    auto put = [&](const std::string& name, const std::optional<Items>& items) {
      for (int i = 0; i < kItems; ++i) {
        view.variables[name + "[" + std::to_string(i) + "]"] =
            items ? std::to_string((*items)[i]) : "none";
      }
    };
    const int opp = Opponent(player);
    const bool proposal = pos.stage == Stage::kProposal;
    if (proposal) {
      put("opponent_proposal_take", pos.proposal[opp]);
    } else {
      put("agent_proposal_take", pos.proposal[player]);
    }
    put("opponent_utterance_take", pos.utterance[opp]);
    put("item_pool", pos.pool);
    put("self_values", pos.values[player]);
    view.variables["turn_type"] = proposal ? "proposal" : "utterance";
  }
};

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_NEGOTIATION_HPP_
