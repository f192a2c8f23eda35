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

#ifndef GAMEARENA_LLM_CHAT_CLIENT_HPP_
#define GAMEARENA_LLM_CHAT_CLIENT_HPP_

#include <cstdint>
#include <deque>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamearena/match.hpp"
#include "gamearena/prompts.hpp"
#include "gamearena/rng.hpp"

namespace gamearena {

struct GenerationParams {
  double temperature = 0.2;
  int max_tokens = 1024;
  int num_samples = 1;

  friend bool operator==(const GenerationParams&, const GenerationParams&) = default;
};

// Raised when the backend rejects the credentials. Not retried.
class AuthenticationError : public AgentTransportError {
 public:
  using AgentTransportError::AgentTransportError;
};

// Raised when the prompt does not fit the model's context window.
class ContextOverflowError : public AgentTransportError {
 public:
  using AgentTransportError::AgentTransportError;
};

// A chat-completion backend. Implementations must tolerate concurrent calls
// unless documented as confined to one match.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual std::string model() const = 0;
  // Returns exactly params.num_samples completions.
  virtual std::vector<std::string> Complete(const std::vector<ChatMessage>& messages,
                                            const GenerationParams& params) = 0;
};

inline void ValidateRequest(const std::vector<ChatMessage>& messages,
                            const GenerationParams& params) {
  if (messages.empty()) throw Error("chat request without messages");
  for (const auto& m : messages) {
    if (m.role != "system" && m.role != "user" && m.role != "assistant") {
      throw Error("invalid chat role: " + m.role);
    }
  }
  if (params.num_samples < 1) throw Error("num_samples must be positive");
  if (params.max_tokens < 1) throw Error("max_tokens must be positive");
}

// Plays back a fixed list of completions in order and records every request.
// Confined to one match.
class ScriptedClient : public ChatClient {
 public:
  struct Call {
    std::vector<ChatMessage> messages;
    GenerationParams params;
  };

  explicit ScriptedClient(std::vector<std::string> script)
      : script_(script.begin(), script.end()) {}

  // One completion per line. "\n" and "\\" escapes encode multi-line
  // completions.
  static ScriptedClient FromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open script " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(Unescape(line));
    return ScriptedClient(std::move(lines));
  }

  static std::string Unescape(std::string_view line) {
    std::string out;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '\\' && i + 1 < line.size()) {
        const char next = line[++i];
        out.push_back(next == 'n' ? '\n' : next);
      } else {
        out.push_back(line[i]);
      }
    }
    return out;
  }

  std::string model() const override { return "scripted"; }

  std::vector<std::string> Complete(const std::vector<ChatMessage>& messages,
                                    const GenerationParams& params) override {
    ValidateRequest(messages, params);
    calls_.push_back({messages, params});
    std::vector<std::string> out;
    for (int i = 0; i < params.num_samples; ++i) {
      if (script_.empty()) throw AgentTransportError("script exhausted");
      out.push_back(std::move(script_.front()));
      script_.pop_front();
    }
    return out;
  }

  const std::vector<Call>& calls() const { return calls_; }

  int completions_served() const {
    int n = 0;
    for (const auto& c : calls_) n += c.params.num_samples;
    return n;
  }

 private:
  std::deque<std::string> script_;
  std::vector<Call> calls_;
};

// Legal actions listed in the last "The legal actions are: ..." line of the
// final user message.
inline std::vector<std::string> ListedLegalActions(const std::vector<ChatMessage>& messages) {
  static constexpr std::string_view kMarker = "The legal actions are: ";
  std::vector<std::string> out;
  if (messages.empty()) return out;
  const std::string& text = messages.back().content;
  const auto at = text.rfind(kMarker);
  if (at == std::string::npos) return out;
  const auto begin = at + kMarker.size();
  std::string line = text.substr(begin, text.find('\n', begin) - begin);
  if (!line.empty() && line.back() == '.') line.pop_back();
  // Tokens may contain '>' (Breakthrough's "->") and ", " (Nim), so split
  // only on the separator between two tokens.
  static constexpr std::string_view kSeparator = ">, <";
  std::size_t start = 0;
  while (start < line.size()) {
    const auto next = line.find(kSeparator, start);
    if (next == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, next + 1 - start));
    start = next + 3;
  }
  return out;
}

// Stand-in for an LLM that answers in the CoT output format with a uniformly
// random listed legal action. With probability `bad_match_rate`, drawn once
// per instance, its first answer names no action, which invalidates the
// match. Confined to one match; deterministic given the seed.
class MockLlmClient : public ChatClient {
 public:
  MockLlmClient(std::uint64_t seed, double bad_match_rate = 0.0)
      : rng_(seed), misbehave_(rng_.Bernoulli(bad_match_rate)) {}

  std::string model() const override { return "mock"; }

  std::vector<std::string> Complete(const std::vector<ChatMessage>& messages,
                                    const GenerationParams& params) override {
    ValidateRequest(messages, params);
    std::vector<std::string> out;
    if (misbehave_) {
      misbehave_ = false;
      for (int i = 0; i < params.num_samples; ++i) {
        out.push_back("Thought:\nI am not sure what to do.\n\nAction:\nnone");
      }
      return out;
    }
    const auto legal = ListedLegalActions(messages);
    if (legal.empty()) throw AgentTransportError("mock client found no legal actions");
    for (int i = 0; i < params.num_samples; ++i) {
      out.push_back("Thought:\nAny legal move will do.\n\nAction:\n" +
                    legal[rng_.Below(legal.size())]);
    }
    return out;
  }

 private:
  Rng rng_;
  bool misbehave_;
};

}  // namespace gamearena

#endif  // GAMEARENA_LLM_CHAT_CLIENT_HPP_
