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

#ifndef GAMEARENA_SOLVERS_MCTS_HPP_
#define GAMEARENA_SOLVERS_MCTS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamearena/game_state.hpp"
#include "gamearena/match.hpp"
#include "gamearena/rng.hpp"

namespace gamearena {

struct MctsConfig {
  int num_simulations = 1000;
  double exploration_constant = 1.4142135623730951;
  int max_rollout_depth = 200;
  int determinizations = 20;

  void Validate() const {
    if (num_simulations < 1) throw Error("num_simulations must be >= 1");
    if (!(exploration_constant > 0)) throw Error("exploration_constant must be positive");
    if (max_rollout_depth < 1) throw Error("max_rollout_depth must be >= 1");
    if (determinizations < 1) throw Error("determinizations must be >= 1");
  }
};

// Largest absolute return a player can get; rewards are divided by it so one
// exploration constant works across games.
inline double ReturnScale(const GameState& state) {
  switch (state.game()) {
    case GameId::kKuhnPoker: return 2.0;
    case GameId::kBlindAuction: return games::BlindAuction::kMaxValuation;
    case GameId::kNegotiation: return games::Negotiation::kTotalValue;
    case GameId::kPrisonersDilemma:
      return 3.0 * state.As<games::PrisonersDilemma>().rounds;
    default: return 1.0;
  }
}

// Whether MCTS must sample hidden information and future chance instead of
// searching the true state.
inline bool NeedsDeterminization(const GameState& state) {
  const GameSpec& spec = state.spec();
  return spec.has_chance || spec.turn_mode == TurnMode::kSimultaneous;
}

namespace mcts_internal {

// A simultaneous turn is searched as two plies: the searching player picks
// first, the opponent answers, then the joint action is applied.
struct SearchState {
  GameState state;
  std::optional<ActionToken> pending;
  int first = 0;  // who picks first on simultaneous turns

  bool IsTerminal() const { return state.IsTerminal(); }

  int Actor() const {
    if (!state.IsSimultaneous()) return state.CurrentPlayer();
    return pending ? Opponent(first) : first;
  }

  std::vector<ActionToken> Legal() const { return LegalActions(state, Actor()); }

  void Step(const ActionToken& a) {
    if (!state.IsSimultaneous()) {
      state = Apply(state, a);
    } else if (!pending) {
      pending = a;
    } else {
      state = first == 0 ? ApplyJoint(state, *pending, a)
                         : ApplyJoint(state, a, *pending);
      pending.reset();
    }
  }
};

struct Node {
  int parent = -1;
  int actor = 0;  // player who chose `action` to reach this node
  std::optional<ActionToken> action;
  std::vector<int> children;
  std::vector<ActionToken> untried;
  bool expanded = false;
  int visits = 0;
  std::array<double, 2> value{};
};

class Tree {
 public:
  Tree(SearchState root, const MctsConfig& config, double scale, Rng& rng)
      : root_(std::move(root)), config_(config), scale_(scale), rng_(rng) {
    nodes_.emplace_back();
  }

  void Simulate() {
    SearchState s = root_;
    int node = 0;
    // Selection.
    while (!s.IsTerminal()) {
      Node& n = nodes_[node];
      if (!n.expanded) {
        n.untried = s.Legal();
        n.expanded = true;
      }
      if (!n.untried.empty()) break;
      node = SelectChild(node);
      s.Step(*nodes_[node].action);
    }
    // Expansion.
    if (!s.IsTerminal()) {
      const int actor = s.Actor();
      auto& untried = nodes_[node].untried;
      const std::size_t k = rng_.Below(untried.size());
      ActionToken a = std::move(untried[k]);
      untried.erase(untried.begin() + static_cast<std::ptrdiff_t>(k));
      Node child;
      child.parent = node;
      child.actor = actor;
      child.action = a;
      nodes_.push_back(std::move(child));
      const int id = static_cast<int>(nodes_.size()) - 1;
      nodes_[node].children.push_back(id);
      node = id;
      s.Step(a);
    }
    // Rollout.
    std::array<double, 2> returns = Rollout(std::move(s));
    // Backpropagation.
    for (int n = node; n != -1; n = nodes_[n].parent) {
      nodes_[n].visits += 1;
      nodes_[n].value[0] += returns[0];
      nodes_[n].value[1] += returns[1];
    }
  }

  // Visit counts of the root children keyed by surface.
  std::map<std::string, int> RootVisits() const {
    std::map<std::string, int> out;
    for (int c : nodes_[0].children) {
      out[nodes_[c].action->surface] += nodes_[c].visits;
    }
    return out;
  }

  const std::vector<int>& RootChildren() const { return nodes_[0].children; }
  const Node& node(int i) const { return nodes_[i]; }

 private:
  int SelectChild(int parent) const {
    const Node& p = nodes_[parent];
    const double log_n = std::log(static_cast<double>(p.visits));
    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int c : p.children) {
      const Node& n = nodes_[c];
      const double mean = n.value[n.actor] / n.visits;
      const double score =
          mean + config_.exploration_constant * std::sqrt(log_n / n.visits);
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    return best;
  }

  std::array<double, 2> Rollout(SearchState s) {
    for (int depth = 0; !s.IsTerminal(); ++depth) {
      if (depth >= config_.max_rollout_depth) {
        auto cut = CutoffReturns(s.state);
        return cut ? *cut : std::array<double, 2>{0.0, 0.0};
      }
      auto legal = s.Legal();
      s.Step(legal[rng_.Below(legal.size())]);
    }
    auto r = GetOutcome(s.state).returns;
    return {r[0] / scale_, r[1] / scale_};
  }

  SearchState root_;
  const MctsConfig& config_;
  double scale_;
  Rng& rng_;
  std::vector<Node> nodes_;
};

}  // namespace mcts_internal

struct MctsSearchResult {
  ActionToken action;
  std::map<std::string, int> root_visits;  // summed over determinizations
};

// UCT search from `player`'s point of view. Games with hidden information,
// chance or simultaneous moves are searched over sampled determinizations
// with the simulation budget split evenly; root visits are summed across
// them. Ties in visits go to the lowest surface string.
inline MctsSearchResult MctsSearch(const GameState& state, int player,
                                   const MctsConfig& config, Rng& rng) {
  config.Validate();
  if (!state.CanAct(player)) throw StateError("mcts: player is not to move");

  const double scale = ReturnScale(state);
  const bool sample = NeedsDeterminization(state);
  const int worlds =
      sample ? std::clamp(config.determinizations, 1, config.num_simulations)
             : 1;
  std::map<std::string, int> visits;
  std::map<std::string, ActionToken> tokens;
  for (int w = 0; w < worlds; ++w) {
    const int budget = config.num_simulations / worlds +
                       (w < config.num_simulations % worlds ? 1 : 0);
    mcts_internal::SearchState root{
        sample ? Determinize(state, player, rng) : state, std::nullopt, player};
    mcts_internal::Tree tree(std::move(root), config, scale, rng);
    for (int i = 0; i < budget; ++i) tree.Simulate();
    for (int c : tree.RootChildren()) {
      const auto& n = tree.node(c);
      visits[n.action->surface] += n.visits;
      tokens.emplace(n.action->surface, *n.action);
    }
  }
  auto best = visits.begin();
  for (auto it = visits.begin(); it != visits.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return MctsSearchResult{tokens.at(best->first), std::move(visits)};
}

inline ActionToken MctsAct(const GameState& state, int player,
                           const MctsConfig& config, std::uint64_t seed) {
  Rng rng(seed);
  return MctsSearch(state, player, config, rng).action;
}

class MctsAgent : public Agent {
 public:
  MctsAgent(MctsConfig config, std::uint64_t seed, std::string id = "mcts")
      : config_(config), rng_(seed), id_(std::move(id)) {}

  std::string id() const override { return id_; }

  AgentDecision Act(const GameState& state, int player) override {
    AgentDecision d;
    d.action = MctsSearch(state, player, config_, rng_).action;
    d.raw_action = d.action->surface;
    return d;
  }

 private:
  MctsConfig config_;
  Rng rng_;
  std::string id_;
};

}  // namespace gamearena

#endif  // GAMEARENA_SOLVERS_MCTS_HPP_
