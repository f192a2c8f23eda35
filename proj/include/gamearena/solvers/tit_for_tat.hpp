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

#ifndef GAMEARENA_SOLVERS_TIT_FOR_TAT_HPP_
#define GAMEARENA_SOLVERS_TIT_FOR_TAT_HPP_

#include <string>
#include <utility>

#include "gamearena/game_state.hpp"
#include "gamearena/match.hpp"

namespace gamearena {

// Opens with <Silent>, then repeats the opponent's previous action.
inline ActionToken TitForTatAct(const History& history, int player) {
  using games::PrisonersDilemma;
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    if (it->player == Opponent(player)) {
      auto m = PrisonersDilemma::Parse(it->surface);
      if (!m) throw Error("unexpected history entry " + it->surface);
      return MakeToken<PrisonersDilemma>(*m);
    }
  }
  return MakeToken<PrisonersDilemma>(PrisonersDilemma::Move{false});
}

class TitForTatAgent : public Agent {
 public:
  explicit TitForTatAgent(std::string id = "tit_for_tat") : id_(std::move(id)) {}

  std::string id() const override { return id_; }

  AgentDecision Act(const GameState& state, int player) override {
    if (state.game() != GameId::kPrisonersDilemma) {
      throw Error("tit-for-tat only plays prisoners_dilemma");
    }
    AgentDecision d;
    d.action = TitForTatAct(state.history(), player);
    d.raw_action = d.action->surface;
    return d;
  }

 private:
  std::string id_;
};

// Plays the same surface every turn; used for scripted baselines such as an
// always-Testify opponent.
class ConstantAgent : public Agent {
 public:
  ConstantAgent(std::string surface, std::string id)
      : surface_(std::move(surface)), id_(std::move(id)) {}

  std::string id() const override { return id_; }

  AgentDecision Act(const GameState& state, int /*player*/) override {
    AgentDecision d;
    d.raw_action = surface_;
    d.action = ParseSurface(state.game(), surface_);
    if (!d.action) d.failure = std::string(causes::kMalformedAction);
    return d;
  }

 private:
  std::string surface_;
  std::string id_;
};

}  // namespace gamearena

#endif  // GAMEARENA_SOLVERS_TIT_FOR_TAT_HPP_
