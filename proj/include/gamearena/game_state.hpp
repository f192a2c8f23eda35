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

#ifndef GAMEARENA_GAME_STATE_HPP_
#define GAMEARENA_GAME_STATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gamearena/games/blind_auction.hpp"
#include "gamearena/games/breakthrough.hpp"
#include "gamearena/games/connect_four.hpp"
#include "gamearena/games/kuhn_poker.hpp"
#include "gamearena/games/liars_dice.hpp"
#include "gamearena/games/negotiation.hpp"
#include "gamearena/games/nim.hpp"
#include "gamearena/games/pig.hpp"
#include "gamearena/games/prisoners_dilemma.hpp"
#include "gamearena/games/tictactoe.hpp"
#include "gamearena/rng.hpp"
#include "gamearena/types.hpp"

namespace gamearena {

// Rule structs, in GameId order.
template <class... Gs>
struct GameList {};
using AllGames =
    GameList<games::TicTacToe, games::ConnectFour, games::Breakthrough,
             games::KuhnPoker, games::LiarsDice, games::BlindAuction,
             games::Negotiation, games::Nim, games::Pig,
             games::PrisonersDilemma>;

template <class L>
struct MoveVariantOf;
template <class... Gs>
struct MoveVariantOf<GameList<Gs...>> {
  using Move = std::variant<typename Gs::Move...>;
  using Position = std::variant<typename Gs::Position...>;
};

using Move = MoveVariantOf<AllGames>::Move;
using Position = MoveVariantOf<AllGames>::Position;

// Calls f(std::type_identity<G>{}) with the rule struct for `id`.
template <class F>
decltype(auto) VisitGame(GameId id, F&& f) {
  using games::BlindAuction, games::Breakthrough, games::ConnectFour,
      games::KuhnPoker, games::LiarsDice, games::Negotiation, games::Nim,
      games::Pig, games::PrisonersDilemma, games::TicTacToe;
  switch (id) {
    case GameId::kTicTacToe: return f(std::type_identity<TicTacToe>{});
    case GameId::kConnectFour: return f(std::type_identity<ConnectFour>{});
    case GameId::kBreakthrough: return f(std::type_identity<Breakthrough>{});
    case GameId::kKuhnPoker: return f(std::type_identity<KuhnPoker>{});
    case GameId::kLiarsDice: return f(std::type_identity<LiarsDice>{});
    case GameId::kBlindAuction: return f(std::type_identity<BlindAuction>{});
    case GameId::kNegotiation: return f(std::type_identity<Negotiation>{});
    case GameId::kNim: return f(std::type_identity<Nim>{});
    case GameId::kPig: return f(std::type_identity<Pig>{});
    case GameId::kPrisonersDilemma:
      return f(std::type_identity<PrisonersDilemma>{});
  }
  throw Error("unknown game id");
}

inline const GameSpec& SpecOf(GameId id) {
  return VisitGame(id, []<class G>(std::type_identity<G>) -> const GameSpec& {
    return G::kSpec;
  });
}

// Maps a Position alternative back to its rule struct.
template <class P, class L = AllGames>
struct GameOfPositionImpl;
template <class P, class G, class... Rest>
struct GameOfPositionImpl<P, GameList<G, Rest...>> {
  using type = std::conditional_t<
      std::is_same_v<typename G::Position, P>, G,
      typename GameOfPositionImpl<P, GameList<Rest...>>::type>;
};
template <class P>
struct GameOfPositionImpl<P, GameList<>> {
  using type = void;
};
template <class P>
using GameOf = typename GameOfPositionImpl<P>::type;

// A move in its bracketed surface form together with its parsed form.
struct ActionToken {
  std::string surface;
  Move parsed;

  friend bool operator==(const ActionToken& a, const ActionToken& b) {
    return a.surface == b.surface;
  }
};

template <class G>
ActionToken MakeToken(const typename G::Move& m) {
  return ActionToken{G::Render(m), Move{m}};
}

struct MatchOptions {
  int ipd_rounds = games::PrisonersDilemma::kDefaultRounds;
};

// Immutable snapshot of one match. Successor states are produced by Apply.
class GameState {
 public:
  template <class G>
  static GameState From(typename G::Position pos, std::uint64_t seed = 0,
                        History history = {}) {
    return GameState(G::kSpec.game_id, Position{std::move(pos)}, seed,
                     std::move(history));
  }

  GameId game() const { return game_; }
  const GameSpec& spec() const { return SpecOf(game_); }
  std::uint64_t seed() const { return seed_; }
  const History& history() const { return history_; }
  const Position& position() const { return position_; }

  template <class G>
  const typename G::Position& As() const {
    return std::get<typename G::Position>(position_);
  }

  int CurrentPlayer() const {
    return std::visit(
        [](const auto& pos) {
          return GameOf<std::decay_t<decltype(pos)>>::CurrentPlayer(pos);
        },
        position_);
  }

  bool IsTerminal() const { return CurrentPlayer() == kTerminalPlayer; }

  bool IsSimultaneous() const { return CurrentPlayer() == kSimultaneousPlayer; }

  // Whether `player` has a decision to make in this state.
  bool CanAct(int player) const {
    const int cur = CurrentPlayer();
    return cur == player || (cur == kSimultaneousPlayer && (player == 0 || player == 1));
  }

  // Same position and history, different chance stream for future draws.
  GameState WithSeed(std::uint64_t seed) const {
    GameState s = *this;
    s.seed_ = seed;
    return s;
  }

  GameState WithPosition(Position pos) const {
    GameState s = *this;
    s.position_ = std::move(pos);
    return s;
  }

  GameState WithHistoryEntry(HistoryEntry entry) const {
    GameState s = *this;
    s.history_.push_back(std::move(entry));
    return s;
  }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  GameState(GameId game, Position pos, std::uint64_t seed, History history)
      : game_(game), position_(std::move(pos)), history_(std::move(history)),
        seed_(seed) {}

  GameId game_;
  Position position_;
  History history_;
  std::uint64_t seed_;
};

// Engine operations ---------------------------------------------------------

inline GameState NewMatch(GameId id, std::uint64_t seed,
                          const MatchOptions& options = {}) {
  return VisitGame(id, [&]<class G>(std::type_identity<G>) {
    auto pos = G::Initial(seed);
    if constexpr (std::is_same_v<G, games::PrisonersDilemma>) {
      if (options.ipd_rounds < 1) throw Error("ipd rounds must be positive");
      pos.rounds = options.ipd_rounds;
    }
    return GameState::From<G>(std::move(pos), seed);
  });
}

inline std::vector<ActionToken> LegalActions(const GameState& state, int player) {
  if (state.IsTerminal()) throw StateError("legal_actions on a terminal state");
  if (!state.CanAct(player)) {
    throw StateError("player " + std::to_string(player) + " is not to move");
  }
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    std::vector<ActionToken> out;
    for (const auto& m : G::LegalMoves(state.As<G>(), player)) {
      out.push_back(MakeToken<G>(m));
    }
    return out;
  });
}

// Strict parse of a canonical surface; nullopt when the text is not a
// well-formed action of this game.
inline std::optional<ActionToken> ParseSurface(GameId id, std::string_view text) {
  return VisitGame(id, [&]<class G>(std::type_identity<G>)
                           -> std::optional<ActionToken> {
    auto m = G::Parse(text);
    if (!m) return std::nullopt;
    return MakeToken<G>(*m);
  });
}

// Normalizes an action against the state (Breakthrough restores the capture
// star); identity elsewhere.
inline ActionToken Canonicalize(const GameState& state, const ActionToken& a) {
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    const auto* m = std::get_if<typename G::Move>(&a.parsed);
    if (m == nullptr) return a;
    if constexpr (requires { G::Canonicalize(state.As<G>(), *m); }) {
      return MakeToken<G>(G::Canonicalize(state.As<G>(), *m));
    } else {
      return a;
    }
  });
}

inline bool IsLegal(const GameState& state, int player, const ActionToken& a) {
  if (state.IsTerminal() || !state.CanAct(player)) return false;
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    const auto* m = std::get_if<typename G::Move>(&a.parsed);
    if (m == nullptr) return false;
    for (const auto& legal : G::LegalMoves(state.As<G>(), player)) {
      if (legal == *m) return true;
    }
    return false;
  });
}

inline GameState Apply(const GameState& state, const ActionToken& action) {
  if (state.IsTerminal()) throw StateError("apply on a terminal state");
  if (state.IsSimultaneous()) {
    throw IllegalActionError("simultaneous turn requires a joint action");
  }
  const int player = state.CurrentPlayer();
  if (!IsLegal(state, player, action)) {
    throw IllegalActionError("illegal action " + action.surface);
  }
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    if constexpr (requires { &G::Apply; }) {
      const auto& m = std::get<typename G::Move>(action.parsed);
      auto next = G::Apply(state.As<G>(), m, state.seed());
      return state.WithPosition(Position{std::move(next)})
          .WithHistoryEntry({player, G::Render(m)});
    } else {
      throw IllegalActionError("sequential apply on a simultaneous game");
      return state;
    }
  });
}

inline GameState ApplyJoint(const GameState& state, const ActionToken& a0,
                            const ActionToken& a1) {
  if (state.IsTerminal()) throw StateError("apply on a terminal state");
  if (!state.IsSimultaneous()) {
    throw IllegalActionError("joint action on a sequential turn");
  }
  if (!IsLegal(state, 0, a0)) throw IllegalActionError("illegal action " + a0.surface);
  if (!IsLegal(state, 1, a1)) throw IllegalActionError("illegal action " + a1.surface);
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    if constexpr (requires { &G::ApplyJoint; }) {
      const auto& m0 = std::get<typename G::Move>(a0.parsed);
      const auto& m1 = std::get<typename G::Move>(a1.parsed);
      auto next = G::ApplyJoint(state.As<G>(), m0, m1, state.seed());
      return state.WithPosition(Position{std::move(next)})
          .WithHistoryEntry({0, G::Render(m0)})
          .WithHistoryEntry({1, G::Render(m1)});
    } else {
      throw IllegalActionError("joint apply on a sequential game");
      return state;
    }
  });
}

inline Outcome GetOutcome(const GameState& state) {
  if (!state.IsTerminal()) throw StateError("outcome on a non-terminal state");
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    return G::Result(state.As<G>());
  });
}

// Player-perspective view. Adds `legal_moves` when the player has a decision.
inline ObservationView Observe(const GameState& state, int player) {
  ObservationView view;
  view.player = player;
  VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    G::Observe(state.As<G>(), player, state.history(), view);
  });
  if (!state.IsTerminal() && state.CanAct(player)) {
    std::vector<std::string> surfaces;
    for (const auto& a : LegalActions(state, player)) surfaces.push_back(a.surface);
    view.variables["legal_moves"] = games::JoinSurfaces(surfaces);
  } else {
    view.variables["legal_moves"] = "none";
  }
  return view;
}

// Resamples everything `player` cannot see: the opponent's private
// information and the future chance stream.
inline GameState Determinize(const GameState& state, int player, Rng& rng) {
  GameState s = state.WithSeed(rng.Next());
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>) {
    if constexpr (requires(Rng& r) { G::Determinize(state.As<G>(), player, r); }) {
      return s.WithPosition(Position{G::Determinize(state.As<G>(), player, rng)});
    } else {
      return s;
    }
  });
}

// Returns for a search state cut off before the end, if the game defines them.
inline std::optional<std::array<double, 2>> CutoffReturns(const GameState& state) {
  return VisitGame(state.game(), [&]<class G>(std::type_identity<G>)
                                     -> std::optional<std::array<double, 2>> {
    if constexpr (requires { G::CutoffReturns(state.As<G>()); }) {
      return G::CutoffReturns(state.As<G>());
    } else {
      return std::nullopt;
    }
  });
}

}  // namespace gamearena

#endif  // GAMEARENA_GAME_STATE_HPP_
