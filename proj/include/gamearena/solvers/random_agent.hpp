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

#ifndef GAMEARENA_SOLVERS_RANDOM_AGENT_HPP_
#define GAMEARENA_SOLVERS_RANDOM_AGENT_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "gamearena/game_state.hpp"
#include "gamearena/match.hpp"
#include "gamearena/rng.hpp"

namespace gamearena {

// Uniform choice over the legal actions of `player`.
inline ActionToken RandomAct(const GameState& state, int player, Rng& rng) {
  auto legal = LegalActions(state, player);
  return std::move(legal[rng.Below(legal.size())]);
}

inline ActionToken RandomAct(const GameState& state, int player,
                             std::uint64_t seed) {
  Rng rng(seed);
  return RandomAct(state, player, rng);
}

class RandomAgent : public Agent {
 public:
  explicit RandomAgent(std::uint64_t seed, std::string id = "random")
      : rng_(seed), id_(std::move(id)) {}

  std::string id() const override { return id_; }

  AgentDecision Act(const GameState& state, int player) override {
    AgentDecision d;
    d.action = RandomAct(state, player, rng_);
    d.raw_action = d.action->surface;
    return d;
  }

 private:
  Rng rng_;
  std::string id_;
};

}  // namespace gamearena

#endif  // GAMEARENA_SOLVERS_RANDOM_AGENT_HPP_
