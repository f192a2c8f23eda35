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

#ifndef GAMEARENA_METRICS_HPP_
#define GAMEARENA_METRICS_HPP_

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/match.hpp"

namespace gamearena {

// Normalized relative advantage: (sum_i - sum_o) / (sum_i + sum_o), and 0
// when both sums are zero.
inline double Nra(const std::vector<double>& scores_i, const std::vector<double>& scores_o) {
  if (scores_i.size() != scores_o.size()) throw Error("nra over mismatched match counts");
  const double si = std::accumulate(scores_i.begin(), scores_i.end(), 0.0);
  const double so = std::accumulate(scores_o.begin(), scores_o.end(), 0.0);
  if (si + so == 0) return 0;
  return (si - so) / (si + so);
}

// Win 1, draw 0.5, loss 0.
inline double ZeroSumScore(GameId game, const Outcome& outcome, int player) {
  if (!SpecOf(game).zero_sum) {
    throw Error(std::string(GameName(game)) + " is not zero-sum");
  }
  if (outcome.draw || !outcome.winner) return 0.5;
  return *outcome.winner == player ? 1.0 : 0.0;
}

// f_s for one seat: zero-sum games score win/draw/loss, the others their raw
// (non-negative) rewards.
inline double MatchScore(GameId game, const Outcome& outcome, int player) {
  return SpecOf(game).zero_sum ? ZeroSumScore(game, outcome, player)
                               : outcome.returns[player];
}

// Elo ------------------------------------------------------------------------

inline constexpr double kEloInitial = 1500;
inline constexpr double kEloK = 20;

inline std::pair<double, double> EloExpected(double ra, double rb) {
  const double ea = 1 / (1 + std::pow(10.0, (rb - ra) / 400));
  return {ea, 1 - ea};
}

inline std::pair<double, double> EloUpdate(double ra, double rb, double sa,
                                           double k = kEloK) {
  if (sa != 0 && sa != 0.5 && sa != 1) throw Error("elo result must be 0, 0.5 or 1");
  const double delta = k * (sa - EloExpected(ra, rb).first);
  // K * (S_b - E_b) is exactly -delta; applying it as such keeps the rating
  // sum exact in floating point.
  return {ra + delta, rb - delta};
}

// Elo result for `player`: the higher return wins, equal returns draw. For
// zero-sum games this is the win/draw/loss score.
inline double EloResult(const Outcome& outcome, int player) {
  const double mine = outcome.returns[player];
  const double theirs = outcome.returns[Opponent(player)];
  return mine > theirs ? 1.0 : mine < theirs ? 0.0 : 0.5;
}

// Regret ---------------------------------------------------------------------

// Regret of bidding b1 against b2 with valuation v: overpaying, or missing a
// profitable win by outbidding b2 with b2 + 1.
inline int AuctionRegret(int b1, int b2, int v) {
  if (b1 > b2 + 1) return b1 - (b2 + 1);
  if (b2 + 1 < v) return v - (b2 + 1);
  return 0;
}

// Per-round regret in years of prison against the opponent's move.
inline int IpdRegret(games::PrisonersDilemma::Move move,
                     games::PrisonersDilemma::Move opponent) {
  if (move.testify) return 0;
  return opponent.testify ? 1 : 2;
}

inline int IpdRegret(std::string_view move, std::string_view opponent_move) {
  auto testify = [](std::string_view m) {
    if (m == "<Testify>" || m == "Testify") return true;
    if (m == "<Silent>" || m == "Silent") return false;
    throw Error("malformed prisoner's dilemma move: " + std::string(m));
  };
  return IpdRegret(games::PrisonersDilemma::Move{testify(move)},
                   games::PrisonersDilemma::Move{testify(opponent_move)});
}

inline double SystemReward(const std::array<double, 2>& payoffs) {
  return payoffs[0] + payoffs[1];
}

// Per-record extraction ------------------------------------------------------

struct RoundRegret {
  int round = 0;  // 1-based
  std::array<int, 2> regret{};
};

// Auction: one round. Prisoner's dilemma: one entry per round.
inline std::vector<RoundRegret> RecordRegrets(const MatchRecord& record) {
  std::vector<RoundRegret> out;
  if (!record.valid) return out;
  const GameState end = ReplayRecord(record);
  if (end.game() == GameId::kBlindAuction) {
    const auto& pos = end.As<games::BlindAuction>();
    const auto& bids = *pos.bids;
    out.push_back({1, {AuctionRegret(bids[0], bids[1], pos.valuations[0]),
                       AuctionRegret(bids[1], bids[0], pos.valuations[1])}});
  } else if (end.game() == GameId::kPrisonersDilemma) {
    const auto& pos = end.As<games::PrisonersDilemma>();
    for (std::size_t r = 0; r < pos.played.size(); ++r) {
      const auto& [m0, m1] = pos.played[r];
      out.push_back({static_cast<int>(r) + 1, {IpdRegret(m0, m1), IpdRegret(m1, m0)}});
    }
  }
  return out;
}

struct RoundReward {
  int round = 0;  // 1-based
  std::array<double, 2> payoffs{};
  double system = 0;
};

// Prisoner's dilemma: per-round payoffs. Auction and Negotiation: the match
// rewards as a single round.
inline std::vector<RoundReward> RecordSystemRewards(const MatchRecord& record) {
  std::vector<RoundReward> out;
  if (!record.valid) return out;
  const GameId game = ParseGameId(record.game);
  if (game == GameId::kPrisonersDilemma) {
    const GameState end = ReplayRecord(record);
    const auto& pos = end.As<games::PrisonersDilemma>();
    for (std::size_t r = 0; r < pos.played.size(); ++r) {
      const bool t0 = pos.played[r][0].testify;
      const bool t1 = pos.played[r][1].testify;
      std::array<double, 2> pay = {
          static_cast<double>(games::PrisonersDilemma::Payoff(t0, t1)),
          static_cast<double>(games::PrisonersDilemma::Payoff(t1, t0))};
      out.push_back({static_cast<int>(r) + 1, pay, SystemReward(pay)});
    }
  } else if (game == GameId::kBlindAuction || game == GameId::kNegotiation) {
    out.push_back({1, record.outcome->returns, SystemReward(record.outcome->returns)});
  }
  return out;
}

struct ParetoPoint {
  double x = 0;  // seat 0's value of its allocation
  double y = 0;  // seat 1's
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

// The agreement of a valid Negotiation record, if one was reached.
inline std::optional<ParetoPoint> RecordParetoPoint(const MatchRecord& record) {
  if (ParseGameId(record.game) != GameId::kNegotiation) {
    throw Error("pareto points need negotiation records");
  }
  if (!record.valid) return std::nullopt;
  const GameState end = ReplayRecord(record);
  const auto& pos = end.As<games::Negotiation>();
  if (!pos.agreed) return std::nullopt;
  for (int k = 0; k < 3; ++k) {
    if (pos.allocation[0][k] + pos.allocation[1][k] != pos.pool[k]) {
      throw Error("agreement allocations do not sum to the pool");
    }
  }
  return ParetoPoint{
      static_cast<double>(games::Negotiation::Dot(pos.values[0], pos.allocation[0])),
      static_cast<double>(games::Negotiation::Dot(pos.values[1], pos.allocation[1]))};
}

}  // namespace gamearena

#endif  // GAMEARENA_METRICS_HPP_
