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

#ifndef GAMEARENA_PROMPTS_HPP_
#define GAMEARENA_PROMPTS_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamearena/game_state.hpp"

namespace gamearena {

class MissingVariableError : public Error {
 public:
  using Error::Error;
};

enum class ReasoningStyle { kPrompt, kCot, kScCot, kTotStep, kTotVote };

inline constexpr std::array<ReasoningStyle, 5> kAllStyles = {
    ReasoningStyle::kPrompt, ReasoningStyle::kCot, ReasoningStyle::kScCot,
    ReasoningStyle::kTotStep, ReasoningStyle::kTotVote};

inline std::string_view StyleName(ReasoningStyle style) {
  switch (style) {
    case ReasoningStyle::kPrompt: return "prompt";
    case ReasoningStyle::kCot: return "cot";
    case ReasoningStyle::kScCot: return "sc_cot";
    case ReasoningStyle::kTotStep: return "tot_step";
    case ReasoningStyle::kTotVote: return "tot_vote";
  }
  return "";
}

inline ReasoningStyle ParseStyle(std::string_view name) {
  for (auto s : kAllStyles) {
    if (StyleName(s) == name) return s;
  }
  throw Error("unknown reasoning style: " + std::string(name));
}

// Templates ------------------------------------------------------------------

inline const std::map<std::string, std::string, std::less<>>& PromptAssets() {
  static const auto* assets = new std::map<std::string, std::string, std::less<>>{
#include "gamearena/prompt_assets.inc"
  };
  return *assets;
}

inline const std::string& PromptAsset(std::string_view key) {
  const auto& assets = PromptAssets();
  auto it = assets.find(key);
  if (it == assets.end()) throw Error("missing prompt asset " + std::string(key));
  return it->second;
}

// Placeholder names each game's templates may use. Angle-bracketed text that
// is not listed here (e.g. "<Proposal: [a, b, c]>") is literal.
inline std::vector<std::string> TemplateVariables(GameId game) {
  auto indexed = [](const std::string& base, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(base + "[" + std::to_string(i) + "]");
    return out;
  };
  std::vector<std::string> vars;
  switch (game) {
    case GameId::kTicTacToe:
    case GameId::kConnectFour:
      vars = {"opponent_moves", "self_moves"};
      break;
    case GameId::kBreakthrough:
      vars = {"board_preview", "opponent_moves", "self_moves", "color"};
      break;
    case GameId::kKuhnPoker:
      vars = {"card", "self_moves", "opponent_moves"};
      break;
    case GameId::kLiarsDice:
      vars = {"face_value", "opponent_last_action"};
      break;
    case GameId::kBlindAuction:
      vars = {"valuation"};
      break;
    case GameId::kNegotiation:
      for (const char* base : {"opponent_proposal_take", "agent_proposal_take",
                               "opponent_utterance_take", "item_pool",
                               "self_values"}) {
        auto v = indexed(base, 3);
        vars.insert(vars.end(), v.begin(), v.end());
      }
      break;
    case GameId::kNim:
      vars = indexed("piles", 4);
      break;
    case GameId::kPig:
      vars = {"agent_current_score", "opponent_current_score", "turn_total_score"};
      break;
    case GameId::kPrisonersDilemma:
      vars = {"history"};
      break;
  }
  vars.push_back("legal_moves");
  return vars;
}

// Replaces every "<name>" whose name is in `declared` with its value.
inline std::string Substitute(std::string_view text,
                              const std::map<std::string, std::string>& values,
                              const std::vector<std::string>& declared) {
  std::string out;
  std::set<std::string> missing;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<') {
      const std::size_t close = text.find('>', i + 1);
      if (close != std::string_view::npos) {
        const std::string name(text.substr(i + 1, close - i - 1));
        if (std::find(declared.begin(), declared.end(), name) != declared.end()) {
          auto it = values.find(name);
          if (it == values.end()) {
            missing.insert(name);
          } else {
            out += it->second;
          }
          i = close + 1;
          continue;
        }
      }
    }
    out += text[i++];
  }
  if (!missing.empty()) {
    std::string msg = "missing template variable(s):";
    for (const auto& m : missing) msg += " " + m;
    throw MissingVariableError(msg);
  }
  return out;
}

inline std::string ObservationTemplateKey(GameId game, const ObservationView& view) {
  if (game == GameId::kNegotiation) {
    auto it = view.variables.find("turn_type");
    const bool utterance = it != view.variables.end() && it->second == "utterance";
    return utterance ? "observation/negotiation_utterance"
                     : "observation/negotiation_proposal";
  }
  return "observation/" + std::string(GameName(game));
}

struct ChatMessage {
  std::string role;
  std::string content;
  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

struct PromptBundle {
  std::string system;
  std::string head;
  std::string observation;
  std::string reasoning;
  std::vector<ChatMessage> assembled;

  // Flattened form used for logs and golden files.
  std::string Text() const {
    std::string out;
    for (const auto& m : assembled) {
      if (!out.empty()) out += "\n\n";
      out += "[" + m.role + "]\n" + m.content;
    }
    return out;
  }
};

// Builds the four-part prompt. `reasoning_key` overrides the style's template
// (used for the CoT wording variants, e.g. "reasoning/cot_variant_2").
inline PromptBundle Compose(GameId game, const ObservationView& view,
                            ReasoningStyle style,
                            std::string_view reasoning_key = {},
                            const std::string& choices = {}) {
  const auto declared = TemplateVariables(game);
  PromptBundle b;
  b.system = PromptAsset("system");
  b.head = PromptAsset("head/" + std::string(GameName(game)));
  b.observation = Substitute(PromptAsset(ObservationTemplateKey(game, view)),
                             view.variables, declared);
  const std::string key = reasoning_key.empty()
                              ? "reasoning/" + std::string(StyleName(style))
                              : std::string(reasoning_key);
  if (style == ReasoningStyle::kTotVote) {
    b.reasoning = Substitute(PromptAsset(key), {{"choices", choices}}, {"choices"});
  } else {
    b.reasoning = PromptAsset(key);
  }
  b.assembled = {{"system", b.system},
                 {"user", b.head + "\n\n" + b.observation + "\n\n" + b.reasoning}};
  return b;
}

// "Choice 1:\n...\n\nChoice 2:\n..." with 1-based ids.
inline std::string FormatChoices(const std::vector<std::string>& candidates) {
  std::string out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += "Choice " + std::to_string(i + 1) + ":\n" + candidates[i];
  }
  return out;
}

inline PromptBundle ComposeVote(GameId game, const ObservationView& view,
                                const std::vector<std::string>& candidates) {
  return Compose(game, view, ReasoningStyle::kTotVote, {}, FormatChoices(candidates));
}

// Parsing --------------------------------------------------------------------

enum class ParseStatus { kOk, kNoActionFound, kMalformed, kIllegal };

inline std::string_view ParseStatusName(ParseStatus s) {
  switch (s) {
    case ParseStatus::kOk: return "ok";
    case ParseStatus::kNoActionFound: return "no_action_found";
    case ParseStatus::kMalformed: return "malformed";
    case ParseStatus::kIllegal: return "illegal";
  }
  return "";
}

struct ParseResult {
  ParseStatus status = ParseStatus::kNoActionFound;
  std::optional<ActionToken> action;  // set for ok and illegal
  std::string surface;                // canonical form of the extracted text
  std::string raw;
};

namespace prompt_internal {

struct Grammar {
  std::regex pattern;
  // Rebuilds the canonical surface from a match.
  std::string (*canonical)(const std::smatch&);
};

inline std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline std::string Keyword(const std::smatch& m, const std::map<std::string, std::string>& words) {
  auto it = words.find(Lower(m[1].str()));
  return it == words.end() ? m[0].str() : it->second;
}

inline const Grammar& GrammarFor(GameId game) {
  using std::regex;
  constexpr auto icase = regex::ECMAScript | regex::icase;
  static const std::map<GameId, Grammar>* grammars = new std::map<GameId, Grammar>{
      {GameId::kTicTacToe,
       {regex(R"(<C(\d+)R(\d+)>)"),
        [](const std::smatch& m) { return "<C" + m[1].str() + "R" + m[2].str() + ">"; }}},
      {GameId::kConnectFour,
       {regex(R"(<C(\d+)>)"), [](const std::smatch& m) { return "<C" + m[1].str() + ">"; }}},
      {GameId::kBreakthrough,
       {regex(R"(<([a-z]\d+)->([a-z]\d+)(\*?)>)"),
        [](const std::smatch& m) {
          return "<" + m[1].str() + "->" + m[2].str() + m[3].str() + ">";
        }}},
      {GameId::kKuhnPoker,
       {regex(R"(<\s*(pass|bet)\s*>)", icase),
        [](const std::smatch& m) {
          return Keyword(m, {{"pass", "<Pass>"}, {"bet", "<Bet>"}});
        }}},
      {GameId::kLiarsDice,
       {regex(R"(<\s*(liar)\s*>|<\s*(\d+)\s*dices?\s*,\s*(\d+)\s*values?\s*>)", icase),
        [](const std::smatch& m) -> std::string {
          if (m[1].matched) return "<Liar>";
          return "<" + m[2].str() + " dices, " + m[3].str() + " value>";
        }}},
      {GameId::kBlindAuction,
       {regex(R"(<\s*(\d+)\s*>)"), [](const std::smatch& m) { return "<" + m[1].str() + ">"; }}},
      {GameId::kNegotiation,
       {regex(R"(<\s*(agree)\s*>|<\s*(proposal|utterance)\s*:\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*>)",
              icase),
        [](const std::smatch& m) -> std::string {
          if (m[1].matched) return "<Agree>";
          const std::string kind =
              Lower(m[2].str()) == "proposal" ? "Proposal" : "Utterance";
          return "<" + kind + ": [" + m[3].str() + ", " + m[4].str() + ", " +
                 m[5].str() + "]>";
        }}},
      {GameId::kNim,
       {regex(R"(<\s*pile\s*:\s*(\d+)\s*,\s*take\s*:\s*(\d+)\s*>)", icase),
        [](const std::smatch& m) {
          return "<pile:" + m[1].str() + ", take:" + m[2].str() + ">";
        }}},
      {GameId::kPig,
       {regex(R"(<\s*(roll|stop)\s*>)", icase),
        [](const std::smatch& m) {
          return Keyword(m, {{"roll", "<roll>"}, {"stop", "<stop>"}});
        }}},
      {GameId::kPrisonersDilemma,
       {regex(R"(<\s*(silent|testify)\s*>)", icase),
        [](const std::smatch& m) {
          return Keyword(m, {{"silent", "<Silent>"}, {"testify", "<Testify>"}});
        }}},
  };
  return grammars->at(game);
}

}  // namespace prompt_internal

// Extracts the last action-shaped token of `game` from a generation.
inline std::optional<std::string> ExtractSurface(GameId game, const std::string& text) {
  const auto& g = prompt_internal::GrammarFor(game);
  std::optional<std::string> last;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), g.pattern);
       it != std::sregex_iterator(); ++it) {
    last = g.canonical(*it);
  }
  if (!last && game == GameId::kNegotiation) {
    // The proposal template asks for a bare "Agree".
    static const std::regex bare(R"(\bagree\b)", std::regex::icase);
    if (std::regex_search(text, bare)) last = "<Agree>";
  }
  return last;
}

// Parses a generation against `state` for `player`.
inline ParseResult ParseAction(const std::string& generation, const GameState& state,
                               int player) {
  ParseResult r;
  r.raw = generation;
  auto surface = ExtractSurface(state.game(), generation);
  if (!surface) return r;
  r.surface = *surface;
  auto token = ParseSurface(state.game(), *surface);
  if (!token) {
    r.status = ParseStatus::kMalformed;
    return r;
  }
  r.action = Canonicalize(state, *token);
  r.surface = r.action->surface;
  r.status = IsLegal(state, player, *r.action) ? ParseStatus::kOk : ParseStatus::kIllegal;
  return r;
}

// Most frequent action; ties go to the one that appeared first.
inline ActionToken MajorityVote(const std::vector<ActionToken>& actions) {
  if (actions.empty()) throw Error("majority vote over no actions");
  std::map<std::string, int> counts;
  for (const auto& a : actions) ++counts[a.surface];
  const ActionToken* best = &actions.front();
  for (const auto& a : actions) {
    if (counts[a.surface] > counts[best->surface]) best = &a;
  }
  return *best;
}

// Share of attempted matches that were valid.
inline double CompletionRate(int valid, int attempted) {
  if (attempted <= 0) throw Error("completion rate over no attempts");
  return static_cast<double>(valid) / attempted;
}

}  // namespace gamearena

#endif  // GAMEARENA_PROMPTS_HPP_
