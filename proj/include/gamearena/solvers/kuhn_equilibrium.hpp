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

#ifndef GAMEARENA_SOLVERS_KUHN_EQUILIBRIUM_HPP_
#define GAMEARENA_SOLVERS_KUHN_EQUILIBRIUM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gamearena/games/kuhn_poker.hpp"
#include "gamearena/types.hpp"

namespace gamearena::kuhn {

using Rational = boost::multiprecision::cpp_rational;

// Pure strategies are bit masks. Player 0, per card c: bit c = bet at the
// opening, bit 3 + c = call after pass-bet. Player 1, per card c: bit c = bet
// after a pass, bit 3 + c = call a bet.
inline constexpr int kPureStrategies = 64;

// Player 0's return for one deal under a pair of pure strategies.
inline int PurePayoff(const std::array<int, 2>& cards, int s0, int s1) {
  const int c0 = cards[0];
  const int c1 = cards[1];
  const int showdown = c0 > c1 ? 1 : -1;
  if (s0 >> c0 & 1) {                       // B
    return (s1 >> (3 + c1) & 1) ? 2 * showdown : 1;  // BB or BP
  }
  if (!(s1 >> c1 & 1)) return showdown;     // PP
  return (s0 >> (3 + c0) & 1) ? 2 * showdown : -1;   // PBB or PBP
}

// Six times player 0's expected return (an integer) for a strategy pair.
inline int ScaledPayoff(int s0, int s1) {
  int sum = 0;
  for (const auto& deal : games::KuhnPoker::kDeals) sum += PurePayoff(deal, s0, s1);
  return sum;
}

struct Equilibrium {
  Rational value;                      // player 0's expected return
  std::vector<Rational> player0_mix;   // over pure strategies
  std::vector<Rational> player1_mix;
};

// Solves the 64x64 normal form exactly: the column player's LP
//   max sum(w)  s.t.  B w <= 1, w >= 0,  B = 6A + K > 0
// by tableau simplex with Bland's rule over rationals. The row player's mix
// comes from the slack reduced costs.
inline Equilibrium SolveNormalForm() {
  constexpr int n = kPureStrategies;
  constexpr int kShift = 13;  // |6A| <= 12
  const int cols = 2 * n + 1;   // w, slack, rhs
  std::vector<std::vector<Rational>> t(n + 1, std::vector<Rational>(cols));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = ScaledPayoff(i, j) + kShift;
    t[i][n + i] = 1;
    t[i][cols - 1] = 1;
  }
  for (int j = 0; j < n; ++j) t[n][j] = -1;  // objective row: -sum(w)
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols - 1; ++j) {
      if (t[n][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < n; ++i) {
      if (t[i][enter] > 0) {
        Rational ratio = t[i][cols - 1] / t[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw Error("kuhn LP unbounded");
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (int i = 0; i <= n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  const Rational z = t[n][cols - 1];
  Equilibrium eq;
  eq.value = (1 / z - kShift) / 6;
  eq.player1_mix.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (basis[i] < n) eq.player1_mix[basis[i]] = t[i][cols - 1] / z;
  }
  eq.player0_mix.resize(n);
  for (int i = 0; i < n; ++i) eq.player0_mix[i] = t[n][n + i] / z;
  return eq;
}

// Player 0's expected return when both players follow the given mixes.
inline Rational MixedValue(const std::vector<Rational>& x,
                           const std::vector<Rational>& y) {
  Rational v = 0;
  for (int i = 0; i < kPureStrategies; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < kPureStrategies; ++j) {
      if (y[j] != 0) v += x[i] * y[j] * ScaledPayoff(i, j);
    }
  }
  return v / 6;
}

// Probability that player 0 bets at the opening holding `card`.
inline Rational OpeningBetProbability(const Equilibrium& eq, int card) {
  Rational p = 0;
  for (int s = 0; s < kPureStrategies; ++s) {
    if (s >> card & 1) p += eq.player0_mix[s];
  }
  return p;
}

// Vanilla counterfactual regret minimization over the twelve information
// sets, used as an independent check of the LP value.
class Cfr {
 public:
  // Runs `iterations` full-tree passes and returns player 0's expected
  // return under the average strategies.
  double Run(int iterations) {
    for (int it = 0; it < iterations; ++it) {
      for (const auto& deal : games::KuhnPoker::kDeals) {
        Walk(deal, "", 1.0, 1.0, /*chance=*/1.0 / 6);
      }
    }
    return AverageValue();
  }

  // Average probability of betting at the information set "<card><history>".
  double AverageBet(const std::string& infoset) const {
    const auto& n = nodes_.at(infoset);
    const double total = n.strategy_sum[0] + n.strategy_sum[1];
    return total > 0 ? n.strategy_sum[1] / total : 0.5;
  }

 private:
  struct Node {
    std::array<double, 2> regret{};
    std::array<double, 2> strategy_sum{};
  };

  static bool Terminal(const std::string& h) {
    return h == "pp" || h == "bp" || h == "bb" || h == "pbp" || h == "pbb";
  }

  static double Payoff0(const std::array<int, 2>& cards, const std::string& h) {
    const double showdown = cards[0] > cards[1] ? 1 : -1;
    if (h == "pp") return showdown;
    if (h == "bp") return 1;
    if (h == "pbp") return -1;
    return 2 * showdown;  // bb, pbb
  }

  static std::array<double, 2> Current(const Node& n) {
    const double a = std::max(n.regret[0], 0.0);
    const double b = std::max(n.regret[1], 0.0);
    if (a + b <= 0) return {0.5, 0.5};
    return {a / (a + b), b / (a + b)};
  }

  // Returns player 0's expected value of the subtree.
  double Walk(const std::array<int, 2>& cards, const std::string& h, double r0,
              double r1, double chance) {
    if (Terminal(h)) return Payoff0(cards, h);
    const int p = static_cast<int>(h.size() % 2);
    const std::string key = std::string(1, games::KuhnPoker::CardName(cards[p])) + h;
    Node& node = nodes_[key];
    const auto sigma = Current(node);
    std::array<double, 2> child{};
    double v = 0;
    for (int a = 0; a < 2; ++a) {
      const std::string next = h + (a == 1 ? "b" : "p");
      child[a] = p == 0 ? Walk(cards, next, r0 * sigma[a], r1, chance)
                        : Walk(cards, next, r0, r1 * sigma[a], chance);
      v += sigma[a] * child[a];
    }
    const double sign = p == 0 ? 1.0 : -1.0;
    const double opp_reach = (p == 0 ? r1 : r0) * chance;
    const double own_reach = p == 0 ? r0 : r1;
    for (int a = 0; a < 2; ++a) {
      node.regret[a] += opp_reach * sign * (child[a] - v);
      node.strategy_sum[a] += own_reach * chance * sigma[a];
    }
    return v;
  }

  double AverageValue() const {
    double total = 0;
    for (const auto& deal : games::KuhnPoker::kDeals) {
      total += AverageWalk(deal, "") / 6;
    }
    return total;
  }

  double AverageWalk(const std::array<int, 2>& cards, const std::string& h) const {
    if (Terminal(h)) return Payoff0(cards, h);
    const int p = static_cast<int>(h.size() % 2);
    const double bet =
        AverageBet(std::string(1, games::KuhnPoker::CardName(cards[p])) + h);
    return (1 - bet) * AverageWalk(cards, h + "p") +
           bet * AverageWalk(cards, h + "b");
  }

  std::map<std::string, Node> nodes_;
};

}  // namespace gamearena::kuhn

#endif  // GAMEARENA_SOLVERS_KUHN_EQUILIBRIUM_HPP_
