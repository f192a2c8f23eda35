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

#ifndef GAMEARENA_SOLVERS_ORACLE_HPP_
#define GAMEARENA_SOLVERS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/solvers/kuhn_equilibrium.hpp"

namespace gamearena {

class OracleBudgetError : public Error {
 public:
  using Error::Error;
};

struct OracleResult {
  double value = 0;  // for the player to move
  std::optional<ActionToken> best_action;
  // Every action attaining `value` (perfect-information games only).
  std::vector<ActionToken> optimal_actions;
};

struct OracleOptions {
  std::int64_t node_budget = 20'000'000;
  int pig_depth = 12;  // decisions searched before the banked-score cutoff
};

namespace oracle_internal {

template <class G>
std::string PositionKey(const typename G::Position& pos) {
  std::string key;
  auto put = [&](int v) { key.push_back(static_cast<char>(v + 2)); };
  if constexpr (std::is_same_v<G, games::TicTacToe>) {
    for (int c : pos.cells) put(c);
    put(pos.to_move);
  } else if constexpr (std::is_same_v<G, games::ConnectFour> ||
                       std::is_same_v<G, games::Breakthrough>) {
    for (const auto& row : pos.cells) {
      for (int c : row) put(c);
    }
    put(pos.to_move);
  } else if constexpr (std::is_same_v<G, games::Nim>) {
    for (int p : pos.piles) put(p);
    put(pos.to_move);
  } else if constexpr (std::is_same_v<G, games::LiarsDice>) {
    put(pos.dice[0]);
    put(pos.dice[1]);
    put(pos.standing ? pos.standing->quantity : 0);
    put(pos.standing ? pos.standing->face : 0);
    put(pos.last_bidder);
    put(pos.to_move);
    put(pos.challenged ? 1 : 0);
  } else {
    static_assert(sizeof(G) == 0, "no position key for this game");
  }
  return key;
}

enum class Bound { kExact, kLower, kUpper };

// Negamax with alpha-beta and a transposition table for deterministic
// two-player zero-sum games with alternating moves. Values are for the player
// to move.
template <class G>
class Negamax {
 public:
  using Position = typename G::Position;

  explicit Negamax(std::int64_t budget) : budget_(budget) {}

  double Value(const Position& pos, double alpha, double beta) {
    if (G::IsTerminal(pos)) {
      return G::Result(pos).returns[pos.to_move];
    }
    if (++nodes_ > budget_) throw OracleBudgetError("oracle node budget exceeded");
    const std::string key = PositionKey<G>(pos);
    const double alpha0 = alpha;
    if (auto it = table_.find(key); it != table_.end()) {
      const auto& [v, bound] = it->second;
      if (bound == Bound::kExact) return v;
      if (bound == Bound::kLower) alpha = std::max(alpha, v);
      if (bound == Bound::kUpper) beta = std::min(beta, v);
      if (alpha >= beta) return v;
    }
    const int mover = G::CurrentPlayer(pos);
    double best = -1e9;
    for (const auto& m : Ordered(pos, mover)) {
      const double v = -Value(G::Apply(pos, m, 0), -beta, -alpha);
      best = std::max(best, v);
      alpha = std::max(alpha, v);
      if (alpha >= beta) break;
    }
    const Bound bound = best <= alpha0  ? Bound::kUpper
                        : best >= beta ? Bound::kLower
                                       : Bound::kExact;
    table_[key] = {best, bound};
    return best;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  static std::vector<typename G::Move> Ordered(const Position& pos, int mover) {
    auto moves = G::LegalMoves(pos, mover);
    if constexpr (std::is_same_v<G, games::ConnectFour>) {
      std::stable_sort(moves.begin(), moves.end(), [](const auto& a, const auto& b) {
        return std::abs(a.col - 4) < std::abs(b.col - 4);
      });
    }
    return moves;
  }

  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::unordered_map<std::string, std::pair<double, Bound>> table_;
};

template <class G>
OracleResult SolvePerfectInformation(const GameState& state,
                                     const OracleOptions& options) {
  const auto& pos = state.As<G>();
  const int mover = G::CurrentPlayer(pos);
  Negamax<G> search(options.node_budget);
  OracleResult result;
  result.value = search.Value(pos, -3, 3);
  // Values are integral, so a half-unit window around the root value decides
  // whether a child attains it.
  for (const auto& m : G::LegalMoves(pos, mover)) {
    const double v = -search.Value(G::Apply(pos, m, 0), -result.value - 0.5,
                                   -result.value + 0.5);
    if (v == result.value) result.optimal_actions.push_back(MakeToken<G>(m));
  }
  std::sort(result.optimal_actions.begin(), result.optimal_actions.end(),
            [](const auto& a, const auto& b) { return a.surface < b.surface; });
  result.best_action = result.optimal_actions.front();
  return result;
}

// Expectimax over explicit die faces. Values are the mover's win probability;
// positions deeper than the cap are scored by the banked-score cutoff.
class PigExpectimax {
 public:
  using Position = games::Pig::Position;

  PigExpectimax(int depth, std::int64_t budget) : depth_(depth), budget_(budget) {}

  // Win probability for pos.to_move, and whether rolling is at least as good.
  std::pair<double, bool> Solve(const Position& pos, int depth) {
    if (++nodes_ > budget_) throw OracleBudgetError("oracle node budget exceeded");
    const int p = pos.to_move;
    if (depth >= depth_) return {games::Pig::CutoffReturns(pos)[p], false};
    const auto key = std::make_tuple(pos.scores[0], pos.scores[1], pos.turn_total,
                                     p, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Stop: bank and hand over (or win).
    double stop;
    if (pos.scores[p] + pos.turn_total >= games::Pig::kTarget) {
      stop = 1.0;
    } else {
      Position next = pos;
      next.scores[p] += pos.turn_total;
      next.turn_total = 0;
      next.to_move = Opponent(p);
      stop = 1.0 - Solve(next, depth + 1).first;
    }
    // Roll: expectation over the six faces.
    double roll = 0;
    for (int face = 1; face <= 6; ++face) {
      Position next = pos;
      if (face == 1) {
        next.turn_total = 0;
        next.to_move = Opponent(p);
        roll += (1.0 - Solve(next, depth + 1).first) / 6;
      } else {
        next.turn_total += face;
        roll += Solve(next, depth + 1).first / 6;
      }
    }
    auto out = std::make_pair(std::max(stop, roll), roll >= stop);
    memo_[key] = out;
    return out;
  }

 private:
  int depth_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::map<std::tuple<int, int, int, int, int>, std::pair<double, bool>> memo_;
};

}  // namespace oracle_internal

// Exact game value for the player to move. Tic-Tac-Toe, Nim, Connect-4,
// Breakthrough and Liar's Dice (with both dice known) are solved by negamax
// within the node budget; Pig by capped-depth expectimax; Kuhn poker at the
// opening by the exact normal-form equilibrium, averaged over all deals.
inline OracleResult OracleSolve(const GameState& state,
                                const OracleOptions& options = {}) {
  if (state.IsTerminal()) throw StateError("oracle on a terminal state");
  using namespace games;
  switch (state.game()) {
    case GameId::kTicTacToe:
      return oracle_internal::SolvePerfectInformation<TicTacToe>(state, options);
    case GameId::kConnectFour:
      return oracle_internal::SolvePerfectInformation<ConnectFour>(state, options);
    case GameId::kBreakthrough:
      return oracle_internal::SolvePerfectInformation<Breakthrough>(state, options);
    case GameId::kNim:
      return oracle_internal::SolvePerfectInformation<Nim>(state, options);
    case GameId::kLiarsDice:
      return oracle_internal::SolvePerfectInformation<LiarsDice>(state, options);
    case GameId::kPig: {
      oracle_internal::PigExpectimax search(options.pig_depth, options.node_budget);
      auto [value, roll] = search.Solve(state.As<Pig>(), 0);
      OracleResult r;
      r.value = value;
      r.best_action = MakeToken<Pig>(Pig::Move{roll});
      return r;
    }
    case GameId::kKuhnPoker: {
      const auto& pos = state.As<KuhnPoker>();
      if (!pos.bets.empty()) {
        throw Error("kuhn oracle solves the opening decision only");
      }
      static const kuhn::Equilibrium eq = kuhn::SolveNormalForm();
      OracleResult r;
      r.value = eq.value.convert_to<double>();
      const bool bet = kuhn::OpeningBetProbability(eq, pos.cards[0]) * 2 > 1;
      r.best_action = MakeToken<KuhnPoker>(KuhnPoker::Move{bet});
      return r;
    }
    default:
      throw Error("no oracle for " + std::string(GameName(state.game())));
  }
}

}  // namespace gamearena

#endif  // GAMEARENA_SOLVERS_ORACLE_HPP_
