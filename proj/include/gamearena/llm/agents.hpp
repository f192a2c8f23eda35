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

#ifndef GAMEARENA_LLM_AGENTS_HPP_
#define GAMEARENA_LLM_AGENTS_HPP_

#include <chrono>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "gamearena/llm/chat_client.hpp"
#include "gamearena/match.hpp"
#include "gamearena/prompts.hpp"

namespace gamearena {

enum class AgentStyle { kPrompt, kCot, kScCot, kTot };

inline std::string_view AgentStyleName(AgentStyle s) {
  switch (s) {
    case AgentStyle::kPrompt: return "prompt";
    case AgentStyle::kCot: return "cot";
    case AgentStyle::kScCot: return "sc_cot";
    case AgentStyle::kTot: return "tot";
  }
  return "";
}

inline AgentStyle ParseAgentStyle(std::string_view name) {
  for (auto s : {AgentStyle::kPrompt, AgentStyle::kCot, AgentStyle::kScCot, AgentStyle::kTot}) {
    if (AgentStyleName(s) == name) return s;
  }
  throw Error("unknown agent style: " + std::string(name));
}

struct ReasoningConfig {
  AgentStyle style = AgentStyle::kPrompt;
  int sc_trajectories = 5;
  int tot_candidates = 3;
  int tot_votes = 3;
  // Extra attempts after a generation without a legal action. Zero keeps the
  // strict protocol where the first failure invalidates the match.
  int retries = 0;
  // Overrides the CoT reasoning template, e.g. "reasoning/cot_variant_2".
  std::string cot_template;

  void Validate() const {
    if (sc_trajectories < 1) throw Error("sc_trajectories must be positive");
    if (tot_candidates < 1 || tot_votes < 1) throw Error("tot parameters must be positive");
    if (retries < 0) throw Error("retries must be non-negative");
  }
};

// Completions a single decision costs under `config`.
inline int CompletionsPerMove(const ReasoningConfig& config) {
  switch (config.style) {
    case AgentStyle::kPrompt:
    case AgentStyle::kCot: return 1;
    case AgentStyle::kScCot: return config.sc_trajectories;
    case AgentStyle::kTot: return config.tot_candidates + config.tot_votes;
  }
  return 0;
}

// One reasoning step: the parse plus everything sent and received.
struct LlmStep {
  ParseResult result;
  std::string prompt;      // flattened prompt(s)
  std::string generation;  // generation(s), separated when there are several
};

namespace llm_internal {

inline std::string JoinGenerations(const std::vector<std::string>& gens) {
  if (gens.size() == 1) return gens.front();
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += "[sample " + std::to_string(i + 1) + "]\n" + gens[i];
  }
  return out;
}

// 1-based choice id from "The best choice is {s}"; the last statement wins.
inline std::optional<int> ParseVote(const std::string& text) {
  static const std::regex pattern(R"(best choice is\s*\{?\s*(\d+))", std::regex::icase);
  std::optional<int> vote;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern);
       it != std::sregex_iterator(); ++it) {
    try {
      vote = std::stoi((*it)[1].str());
    } catch (const std::out_of_range&) {
      vote.reset();
    }
  }
  return vote;
}

}  // namespace llm_internal

inline LlmStep PromptStep(const GameState& state, int player, ChatClient& client,
                          const GenerationParams& params) {
  auto bundle = Compose(state.game(), Observe(state, player), ReasoningStyle::kPrompt);
  GenerationParams p = params;
  p.num_samples = 1;
  auto gens = client.Complete(bundle.assembled, p);
  return {ParseAction(gens.front(), state, player), bundle.Text(), gens.front()};
}

inline LlmStep CotStep(const GameState& state, int player, ChatClient& client,
                       const GenerationParams& params, const std::string& cot_template = "") {
  auto bundle = Compose(state.game(), Observe(state, player), ReasoningStyle::kCot,
                        cot_template);
  GenerationParams p = params;
  p.num_samples = 1;
  auto gens = client.Complete(bundle.assembled, p);
  return {ParseAction(gens.front(), state, player), bundle.Text(), gens.front()};
}

// Samples `trajectories` CoT generations and majority-votes over the ones
// that parse to a legal action. Unparsed trajectories do not vote.
inline LlmStep ScCotStep(const GameState& state, int player, ChatClient& client,
                         const GenerationParams& params, int trajectories) {
  auto bundle = Compose(state.game(), Observe(state, player), ReasoningStyle::kScCot);
  GenerationParams p = params;
  p.num_samples = trajectories;
  auto gens = client.Complete(bundle.assembled, p);
  std::vector<ActionToken> legal;
  ParseResult first_failure;
  bool have_failure = false;
  for (const auto& g : gens) {
    auto r = ParseAction(g, state, player);
    if (r.status == ParseStatus::kOk) {
      legal.push_back(*r.action);
    } else if (!have_failure) {
      first_failure = r;
      have_failure = true;
    }
  }
  LlmStep step{{}, bundle.Text(), llm_internal::JoinGenerations(gens)};
  step.result.raw = step.generation;
  if (legal.empty()) {
    step.result.status = ParseStatus::kNoActionFound;
    step.result.surface = first_failure.surface;
    return step;
  }
  step.result.action = MajorityVote(legal);
  step.result.surface = step.result.action->surface;
  step.result.status = ParseStatus::kOk;
  return step;
}

// One generate-then-vote round: `candidates` step generations, then `votes`
// vote generations over all of them. The legal candidate with most votes
// wins, earliest first on ties; without any counted vote the first legal
// candidate is taken.
inline LlmStep TotStep(const GameState& state, int player, ChatClient& client,
                       const GenerationParams& params, int candidates, int votes) {
  const auto view = Observe(state, player);
  auto step_bundle = Compose(state.game(), view, ReasoningStyle::kTotStep);
  GenerationParams p = params;
  p.num_samples = candidates;
  auto gens = client.Complete(step_bundle.assembled, p);
  std::vector<ParseResult> parsed;
  for (const auto& g : gens) parsed.push_back(ParseAction(g, state, player));

  auto vote_bundle = ComposeVote(state.game(), view, gens);
  p.num_samples = votes;
  auto vote_gens = client.Complete(vote_bundle.assembled, p);
  std::vector<int> tally(gens.size(), 0);
  for (const auto& v : vote_gens) {
    auto choice = llm_internal::ParseVote(v);
    if (!choice || *choice < 1 || *choice > static_cast<int>(gens.size())) continue;
    if (parsed[*choice - 1].status != ParseStatus::kOk) continue;
    ++tally[*choice - 1];
  }

  LlmStep step;
  step.prompt = step_bundle.Text() + "\n\n" + vote_bundle.Text();
  std::vector<std::string> all = gens;
  all.insert(all.end(), vote_gens.begin(), vote_gens.end());
  step.generation = llm_internal::JoinGenerations(all);
  step.result.raw = step.generation;
  int best = -1;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].status != ParseStatus::kOk) continue;
    if (best < 0 || tally[i] > tally[best]) best = static_cast<int>(i);
  }
  if (best < 0) {
    step.result.status = ParseStatus::kNoActionFound;
    return step;
  }
  step.result = parsed[best];
  step.result.raw = step.generation;
  return step;
}

// An agent backed by a chat model under one reasoning style. `client` may be
// shared across matches only if it is thread-safe.
class LlmAgent : public Agent {
 public:
  LlmAgent(std::string id, std::shared_ptr<ChatClient> client, ReasoningConfig reasoning,
           GenerationParams params = {},
           std::chrono::milliseconds timeout = std::chrono::seconds(120))
      : id_(std::move(id)), client_(std::move(client)),
        reasoning_(std::move(reasoning)), params_(params), timeout_(timeout) {
    reasoning_.Validate();
  }

  std::string id() const override { return id_; }

  AgentDecision Act(const GameState& state, int player) override {
    const auto start = std::chrono::steady_clock::now();
    AgentDecision d;
    for (int attempt = 0; attempt <= reasoning_.retries; ++attempt) {
      LlmStep step = Step(state, player);
      if (std::chrono::steady_clock::now() - start > timeout_) {
        throw AgentTimeoutError("agent " + id_ + " exceeded its move budget");
      }
      d.prompt = d.prompt ? *d.prompt + "\n\n" + step.prompt : step.prompt;
      d.generation = d.generation ? *d.generation + "\n\n" + step.generation
                                  : step.generation;
      d.raw_action = step.result.surface;
      switch (step.result.status) {
        case ParseStatus::kOk:
          d.action = step.result.action;
          d.failure.clear();
          return d;
        case ParseStatus::kIllegal:
          // Handed on so the match records the illegal action itself.
          d.action = step.result.action;
          d.failure.clear();
          break;
        case ParseStatus::kNoActionFound:
          d.action.reset();
          d.failure = std::string(causes::kNoActionFound);
          break;
        case ParseStatus::kMalformed:
          d.action.reset();
          d.failure = std::string(causes::kMalformedAction);
          break;
      }
    }
    return d;
  }

  const ReasoningConfig& reasoning() const { return reasoning_; }

 private:
  LlmStep Step(const GameState& state, int player) {
    switch (reasoning_.style) {
      case AgentStyle::kPrompt: return PromptStep(state, player, *client_, params_);
      case AgentStyle::kCot:
        return CotStep(state, player, *client_, params_, reasoning_.cot_template);
      case AgentStyle::kScCot:
        return ScCotStep(state, player, *client_, params_, reasoning_.sc_trajectories);
      case AgentStyle::kTot:
        return TotStep(state, player, *client_, params_, reasoning_.tot_candidates,
                       reasoning_.tot_votes);
    }
    throw Error("unknown agent style");
  }

  std::string id_;
  std::shared_ptr<ChatClient> client_;
  ReasoningConfig reasoning_;
  GenerationParams params_;
  std::chrono::milliseconds timeout_;
};

}  // namespace gamearena

#endif  // GAMEARENA_LLM_AGENTS_HPP_
