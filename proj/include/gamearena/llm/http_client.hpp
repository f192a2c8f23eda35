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

#ifndef GAMEARENA_LLM_HTTP_CLIENT_HPP_
#define GAMEARENA_LLM_HTTP_CLIENT_HPP_

#include <chrono>
#include <cstdlib>
#include <memory>
#include <semaphore>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gamearena/llm/chat_client.hpp"
#include "httplib.h"
#include "json.hpp"

namespace gamearena {

struct HttpClientOptions {
  // Base URL up to and including the API version, e.g.
  // "https://api.openai.com/v1". Requests go to <endpoint>/chat/completions.
  std::string endpoint;
  std::string model;
  std::string api_key;  // sent as a bearer token when non-empty
  std::chrono::milliseconds timeout{120'000};
  int max_attempts = 3;
  std::chrono::milliseconds backoff{500};  // doubled after each failed attempt
  int max_in_flight = 8;
};

// OpenAI-compatible chat-completion transport. Thread-safe; concurrent calls
// are bounded by max_in_flight.
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(HttpClientOptions options)
      : options_(std::move(options)),
        slots_(std::make_unique<std::counting_semaphore<>>(options_.max_in_flight)) {
    if (options_.max_attempts < 1) throw Error("max_attempts must be positive");
    if (options_.max_in_flight < 1) throw Error("max_in_flight must be positive");
    SplitEndpoint();
  }

  std::string model() const override { return options_.model; }

  std::vector<std::string> Complete(const std::vector<ChatMessage>& messages,
                                    const GenerationParams& params) override {
    ValidateRequest(messages, params);
    std::vector<std::string> out;
    // Backends without multi-sample support return fewer choices than asked;
    // the remainder is requested one at a time.
    auto first = Request(messages, params, params.num_samples);
    for (auto& text : first) {
      if (static_cast<int>(out.size()) < params.num_samples) out.push_back(std::move(text));
    }
    while (static_cast<int>(out.size()) < params.num_samples) {
      auto more = Request(messages, params, 1);
      out.push_back(std::move(more.front()));
    }
    return out;
  }

  // The JSON body sent for a request.
  nlohmann::json RequestBody(const std::vector<ChatMessage>& messages,
                             const GenerationParams& params, int n) const {
    nlohmann::json body;
    body["model"] = options_.model;
    body["messages"] = nlohmann::json::array();
    for (const auto& m : messages) {
      body["messages"].push_back({{"role", m.role}, {"content", m.content}});
    }
    body["temperature"] = params.temperature;
    body["max_tokens"] = params.max_tokens;
    body["n"] = n;
    return body;
  }

 private:
  void SplitEndpoint() {
    const auto scheme = options_.endpoint.find("://");
    if (scheme == std::string::npos) {
      throw Error("endpoint must include a scheme: " + options_.endpoint);
    }
    const auto path = options_.endpoint.find('/', scheme + 3);
    host_ = options_.endpoint.substr(0, path);
    path_ = (path == std::string::npos ? "" : options_.endpoint.substr(path));
    while (!path_.empty() && path_.back() == '/') path_.pop_back();
    path_ += "/chat/completions";
  }

  std::vector<std::string> Request(const std::vector<ChatMessage>& messages,
                                   const GenerationParams& params, int n) {
    const std::string body = RequestBody(messages, params, n).dump();
    httplib::Headers headers;
    if (!options_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + options_.api_key);
    }
    std::string last_error;
    auto delay = options_.backoff;
    for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(delay);
        delay *= 2;
      }
      slots_->acquire();
      httplib::Client client(host_);
      client.set_connection_timeout(options_.timeout);
      client.set_read_timeout(options_.timeout);
      client.set_write_timeout(options_.timeout);
      auto res = client.Post(path_, headers, body, "application/json");
      slots_->release();
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status == 401 || res->status == 403) {
        throw AuthenticationError("authentication failed (HTTP " +
                                  std::to_string(res->status) + ")");
      }
      if (res->status == 400 && res->body.find("context") != std::string::npos) {
        throw ContextOverflowError("context overflow: " + res->body);
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        throw AgentTransportError("HTTP " + std::to_string(res->status) + ": " + res->body);
      }
      return ParseChoices(res->body);
    }
    throw AgentTransportError("transport failed after " +
                              std::to_string(options_.max_attempts) +
                              " attempts: " + last_error);
  }

  static std::vector<std::string> ParseChoices(const std::string& body) {
    std::vector<std::string> out;
    try {
      const auto j = nlohmann::json::parse(body);
      for (const auto& c : j.at("choices")) {
        const auto& content = c.at("message").at("content");
        out.push_back(content.is_null() ? "" : content.get<std::string>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw AgentTransportError(std::string("bad completion payload: ") + e.what());
    }
    if (out.empty()) throw AgentTransportError("completion without choices");
    return out;
  }

  HttpClientOptions options_;
  std::unique_ptr<std::counting_semaphore<>> slots_;
  std::string host_;
  std::string path_;
};

// Reads the API key from the named environment variable. An empty name means
// no authentication.
inline std::string ApiKeyFromEnv(const std::string& variable) {
  if (variable.empty()) return "";
  const char* value = std::getenv(variable.c_str());
  if (value == nullptr || *value == '\0') {
    throw Error("missing credentials: environment variable " + variable + " is not set");
  }
  return value;
}

}  // namespace gamearena

#endif  // GAMEARENA_LLM_HTTP_CLIENT_HPP_
