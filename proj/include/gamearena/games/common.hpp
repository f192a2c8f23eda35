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

#ifndef GAMEARENA_GAMES_COMMON_HPP_
#define GAMEARENA_GAMES_COMMON_HPP_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamearena/types.hpp"

namespace gamearena::games {

// Comma-separated action surfaces, or "none" for an empty list.
inline std::string JoinSurfaces(const std::vector<std::string>& surfaces) {
  if (surfaces.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    if (i > 0) out += ", ";
    out += surfaces[i];
  }
  return out;
}

inline std::vector<std::string> MovesOf(const History& history, int player) {
  std::vector<std::string> out;
  for (const auto& entry : history) {
    if (entry.player == player) out.push_back(entry.surface);
  }
  return out;
}

inline void AddMoveLists(const History& history, int player,
                         ObservationView& view) {
  view.variables["self_moves"] = JoinSurfaces(MovesOf(history, player));
  view.variables["opponent_moves"] =
      JoinSurfaces(MovesOf(history, Opponent(player)));
}

// Parses a full decimal integer; nullopt on any trailing garbage.
inline std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Strips a required literal prefix; returns false if absent.
inline bool Consume(std::string_view& text, std::string_view literal) {
  if (!text.starts_with(literal)) return false;
  text.remove_prefix(literal.size());
  return true;
}

// Reads leading digits (at least one) from text.
inline std::optional<int> ConsumeInt(std::string_view& text) {
  std::size_t n = 0;
  while (n < text.size() && n < 9 && text[n] >= '0' && text[n] <= '9') ++n;
  if (n == 0) return std::nullopt;
  auto value = ParseInt(text.substr(0, n));
  text.remove_prefix(n);
  return value;
}

}  // namespace gamearena::games

#endif  // GAMEARENA_GAMES_COMMON_HPP_
