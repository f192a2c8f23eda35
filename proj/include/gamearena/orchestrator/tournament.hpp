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

#ifndef GAMEARENA_ORCHESTRATOR_TOURNAMENT_HPP_
#define GAMEARENA_ORCHESTRATOR_TOURNAMENT_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gamearena/llm/agents.hpp"
#include "gamearena/llm/chat_client.hpp"
#include "gamearena/llm/http_client.hpp"
#include "gamearena/match.hpp"
#include "gamearena/orchestrator/config.hpp"
#include "gamearena/report.hpp"
#include "gamearena/rng.hpp"
#include "gamearena/solvers/mcts.hpp"
#include "gamearena/solvers/random_agent.hpp"
#include "gamearena/solvers/tit_for_tat.hpp"

namespace gamearena {

// Builds a fresh agent for every match so per-agent state (search trees,
// script queues) never crosses matches. HTTP clients are shared per agent
// spec because they are thread-safe and carry the in-flight limit.
class AgentFactory {
 public:
  explicit AgentFactory(std::map<std::string, AgentSpec> specs) : specs_(std::move(specs)) {
    for (const auto& [id, spec] : specs_) {
      if (spec.kind == AgentKind::kLlm && spec.client == ClientKind::kHttp) {
        HttpClientOptions o;
        o.endpoint = spec.endpoint;
        o.model = spec.model;
        o.api_key = ApiKeyFromEnv(spec.api_key_env);
        o.timeout = std::chrono::milliseconds(spec.timeout_ms);
        o.max_in_flight = spec.max_in_flight;
        http_.emplace(id, std::make_shared<HttpChatClient>(std::move(o)));
      }
    }
  }

  const AgentSpec& spec(const std::string& id) const {
    auto it = specs_.find(id);
    if (it == specs_.end()) throw ConfigError("unknown agent " + id);
    return it->second;
  }

  std::unique_ptr<Agent> Make(const std::string& id, std::uint64_t seed) const {
    const AgentSpec& s = spec(id);
    switch (s.kind) {
      case AgentKind::kRandom: return std::make_unique<RandomAgent>(seed, id);
      case AgentKind::kMcts: return std::make_unique<MctsAgent>(s.mcts, seed, id);
      case AgentKind::kTitForTat: return std::make_unique<TitForTatAgent>(id);
      case AgentKind::kConstant: return std::make_unique<ConstantAgent>(s.surface, id);
      case AgentKind::kLlm: {
        std::shared_ptr<ChatClient> client;
        switch (s.client) {
          case ClientKind::kHttp: client = http_.at(id); break;
          case ClientKind::kMock:
            client = std::make_shared<MockLlmClient>(seed, s.bad_match_rate);
            break;
          case ClientKind::kScripted:
            client = std::make_shared<ScriptedClient>(ScriptedClient::FromFile(s.script));
            break;
        }
        return std::make_unique<LlmAgent>(id, std::move(client), s.reasoning, s.generation,
                                          std::chrono::milliseconds(s.timeout_ms));
      }
    }
    throw Error("unknown agent kind");
  }

 private:
  std::map<std::string, AgentSpec> specs_;
  std::map<std::string, std::shared_ptr<HttpChatClient>> http_;
};

// Runs fn(0..n-1) on up to `parallelism` threads. The first exception is
// rethrown after all workers stop.
inline void ParallelFor(int n, int parallelism, const std::function<void(int)>& fn) {
  if (parallelism <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < std::min(parallelism, n); ++w) {
    workers.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

// Seed of one attempt: a pure function of the base seed, the competition,
// the seat slot and the attempt index within that slot.
inline std::uint64_t MatchSeed(std::uint64_t base_seed, const std::string& competition,
                               int slot, int attempt) {
  return HashCombine(HashCombine(HashCombine(base_seed, HashTag(competition)),
                                 static_cast<std::uint64_t>(slot)),
                     static_cast<std::uint64_t>(attempt));
}

inline std::uint64_t AgentSeed(std::uint64_t match_seed, int seat) {
  return HashCombine(match_seed, HashTag(seat == 0 ? "seat0" : "seat1"));
}

struct CompetitionRun {
  CompetitionConfig config;
  std::vector<MatchRecord> records;  // every attempt, in index order
  int valid = 0;
  bool cap_reached = false;
  std::optional<std::string> error;  // set when the competition aborted

  bool complete() const { return !error && valid >= config.valid_matches_target; }
};

struct TournamentResult {
  Manifest manifest;
  std::vector<CompetitionRun> runs;
  Report report;

  std::vector<MatchRecord> AllRecords() const {
    std::vector<MatchRecord> out;
    for (const auto& r : runs) out.insert(out.end(), r.records.begin(), r.records.end());
    return out;
  }
};

namespace tournament_internal {

// Seat slot 0: agent A plays seat 0. Slot 1: agent B plays seat 0.
struct Slot {
  int needed = 0;    // valid matches still missing
  int attempts = 0;  // attempts issued so far
  int cap = 0;
};

struct Job {
  std::size_t competition;
  int slot;
  int attempt;
};

struct Attempt {
  int slot;
  int attempt;
  MatchRecord record;
};

}  // namespace tournament_internal

// Runs every competition until its valid-match target is met or its attempt
// cap is exhausted. Work proceeds in waves: each wave issues exactly as many
// attempts per seat slot as valid matches are missing, so the record set is
// independent of `parallelism` and thread timing.
inline std::vector<CompetitionRun> RunCompetitions(const std::vector<CompetitionConfig>& configs,
                                                   const AgentFactory& factory,
                                                   int parallelism,
                                                   const RunOptions& options = {}) {
  using namespace tournament_internal;
  std::vector<CompetitionRun> runs(configs.size());
  std::vector<std::array<Slot, 2>> slots(configs.size());
  std::vector<std::vector<Attempt>> attempts(configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    ValidateCompetition(configs[c]);
    runs[c].config = configs[c];
    const int target = configs[c].valid_matches_target;
    const int cap = configs[c].attempt_cap_factor * target;
    const bool split = configs[c].alternate_first_player &&
                       SpecOf(configs[c].game).turn_mode == TurnMode::kSequential;
    if (split) {
      slots[c][0] = {target / 2, 0, cap / 2};
      slots[c][1] = {target / 2, 0, cap / 2};
    } else {
      slots[c][0] = {target, 0, cap};
    }
  }

  while (true) {
    std::vector<Job> jobs;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      if (runs[c].error) continue;
      for (int s = 0; s < 2; ++s) {
        auto& slot = slots[c][s];
        const int issue = std::min(slot.needed, slot.cap - slot.attempts);
        for (int k = 0; k < issue; ++k) jobs.push_back({c, s, slot.attempts + k});
        slot.attempts += issue;
      }
    }
    if (jobs.empty()) break;

    std::vector<std::optional<MatchRecord>> results(jobs.size());
    std::vector<std::optional<std::string>> errors(jobs.size());
    ParallelFor(static_cast<int>(jobs.size()), parallelism, [&](int j) {
      const Job& job = jobs[j];
      const auto& cfg = configs[job.competition];
      const std::uint64_t seed = MatchSeed(cfg.base_seed, cfg.id, job.slot, job.attempt);
      const std::string& first = job.slot == 0 ? cfg.agent_a : cfg.agent_b;
      const std::string& second = job.slot == 0 ? cfg.agent_b : cfg.agent_a;
      try {
        auto a0 = factory.Make(first, AgentSeed(seed, 0));
        auto a1 = factory.Make(second, AgentSeed(seed, 1));
        MatchRecord rec = RunMatch(cfg.game, {a0.get(), a1.get()}, seed, options);
        rec.competition = cfg.id;
        results[j] = std::move(rec);
      } catch (const std::exception& e) {
        errors[j] = e.what();
      }
    });

    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const Job& job = jobs[j];
      auto& run = runs[job.competition];
      if (errors[j]) {
        if (!run.error) run.error = *errors[j];
        continue;
      }
      if (results[j]->valid) --slots[job.competition][job.slot].needed;
      attempts[job.competition].push_back({job.slot, job.attempt, std::move(*results[j])});
    }
  }

  for (std::size_t c = 0; c < configs.size(); ++c) {
    auto& list = attempts[c];
    std::sort(list.begin(), list.end(), [](const Attempt& a, const Attempt& b) {
      return std::tie(a.attempt, a.slot) < std::tie(b.attempt, b.slot);
    });
    auto& run = runs[c];
    for (auto& a : list) {
      a.record.index = static_cast<int>(run.records.size());
      if (a.record.valid) ++run.valid;
      run.records.push_back(std::move(a.record));
    }
    run.cap_reached = !run.error && run.valid < configs[c].valid_matches_target;
  }
  return runs;
}

inline Manifest ManifestOf(const std::vector<CompetitionRun>& runs) {
  Manifest m;
  for (const auto& r : runs) {
    m.competitions.push_back({r.config.id, r.config.game,
                              {r.config.agent_a, r.config.agent_b},
                              r.config.valid_matches_target});
  }
  return m;
}

// logs/<competition>/<base seed>.jsonl, one record per line in index order.
inline std::filesystem::path LogPath(const std::filesystem::path& logs_dir,
                                     const CompetitionConfig& c) {
  return logs_dir / c.id / (std::to_string(c.base_seed) + ".jsonl");
}

inline void WriteLogs(const std::vector<CompetitionRun>& runs,
                      const std::filesystem::path& logs_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(logs_dir);
  for (const auto& run : runs) {
    const auto path = LogPath(logs_dir, run.config);
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    for (const auto& r : run.records) out << ToJsonLine(r);
  }
  std::ofstream mf(logs_dir / std::string(kManifestFile), std::ios::binary);
  mf << ToJson(ManifestOf(runs)).dump(2) << "\n";
}

// Runs the whole tournament, writes logs under <output>/logs and reports
// under <output>/reports.
inline TournamentResult RunTournament(const TournamentConfig& config,
                                      const RunOptions& options = {}) {
  config.Validate();
  AgentFactory factory(config.agents);
  TournamentResult result;
  result.runs = RunCompetitions(config.competitions, factory, config.parallelism, options);
  result.manifest = ManifestOf(result.runs);
  result.report = BuildReport(result.manifest, result.AllRecords());
  WriteLogs(result.runs, config.output_dir / "logs");
  WriteReport(result.report, config.output_dir / "reports");
  return result;
}

}  // namespace gamearena

#endif  // GAMEARENA_ORCHESTRATOR_TOURNAMENT_HPP_
