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

#ifndef GAMEARENA_PROMPT_GOLDENS_HPP_
#define GAMEARENA_PROMPT_GOLDENS_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gamearena/prompts.hpp"
#include "json.hpp"

namespace gamearena {

// A golden directory holds fixtures.json (fixture key -> game and observation
// variables, plus "_choices" for the vote prompt) and one
// "<key>__<style>.txt" per fixture and reasoning style containing Text()
// followed by a newline.
struct GoldenCheck {
  int checked = 0;
  std::vector<std::string> mismatches;  // golden file names

  bool ok() const { return checked > 0 && mismatches.empty(); }
};

inline GoldenCheck CheckPromptGoldens(const std::filesystem::path& dir) {
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto fixtures = nlohmann::json::parse(read(dir / "fixtures.json"));
  const auto choices = fixtures.at("_choices").get<std::vector<std::string>>();
  GoldenCheck check;
  for (const auto& [key, f] : fixtures.items()) {
    if (key.front() == '_') continue;
    const GameId game = ParseGameId(f.at("game").get<std::string>());
    ObservationView view;
    for (const auto& [k, v] : f.at("variables").items()) view.variables[k] = v.get<std::string>();
    for (ReasoningStyle style : kAllStyles) {
      const PromptBundle b = style == ReasoningStyle::kTotVote
                                 ? ComposeVote(game, view, choices)
                                 : Compose(game, view, style);
      const std::string name = key + "__" + std::string(StyleName(style)) + ".txt";
      ++check.checked;
      if (!std::filesystem::exists(dir / name) || read(dir / name) != b.Text() + "\n") {
        check.mismatches.push_back(name);
      }
    }
  }
  return check;
}

}  // namespace gamearena

#endif  // GAMEARENA_PROMPT_GOLDENS_HPP_
