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

#ifndef GAMEARENA_REPORT_HPP_
#define GAMEARENA_REPORT_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gamearena/match.hpp"
#include "gamearena/metrics.hpp"
#include "gamearena/prompts.hpp"

namespace gamearena {

// One competition as scheduled: `agents[0]` is agent A, who opens the
// even-numbered valid matches of sequential games.
struct CompetitionInfo {
  std::string id;
  GameId game = GameId::kTicTacToe;
  std::array<std::string, 2> agents;
  int valid_target = 50;

  friend bool operator==(const CompetitionInfo&, const CompetitionInfo&) = default;
};

// Written next to the logs so reports can be rebuilt from them alone.
// Competition order is the chronological order used by Elo.
struct Manifest {
  static constexpr int kSchema = 1;
  std::vector<CompetitionInfo> competitions;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

inline Json ToJson(const Manifest& m) {
  Json j;
  j["schema"] = Manifest::kSchema;
  j["competitions"] = Json::array();
  for (const auto& c : m.competitions) {
    j["competitions"].push_back({{"id", c.id},
                                 {"game", GameName(c.game)},
                                 {"agents", {c.agents[0], c.agents[1]}},
                                 {"valid_target", c.valid_target}});
  }
  return j;
}

inline Manifest ManifestFromJson(const Json& j) {
  if (j.at("schema").get<int>() != Manifest::kSchema) {
    throw Error("unsupported manifest schema " + j.at("schema").dump());
  }
  Manifest m;
  for (const auto& c : j.at("competitions")) {
    m.competitions.push_back({c.at("id").get<std::string>(),
                              ParseGameId(c.at("game").get<std::string>()),
                              {c.at("agents").at(0).get<std::string>(),
                               c.at("agents").at(1).get<std::string>()},
                              c.at("valid_target").get<int>()});
  }
  return m;
}

// Records of one competition in attempt order plus the derived score vectors.
struct CompetitionResult {
  CompetitionInfo info;
  std::vector<MatchRecord> records;
  int valid = 0;
  int attempted = 0;
  // Per valid match, the score of agent A and of agent B.
  std::array<std::vector<double>, 2> scores;

  bool complete() const { return valid >= info.valid_target; }
  double completion_rate() const { return CompletionRate(valid, attempted); }
  // NRA of agent A against agent B.
  double nra() const { return Nra(scores[0], scores[1]); }
};

inline CompetitionResult Summarize(const CompetitionInfo& info,
                                   std::vector<MatchRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.index.value_or(0) < b.index.value_or(0);
  });
  CompetitionResult r;
  r.info = info;
  r.attempted = static_cast<int>(records.size());
  for (const auto& rec : records) {
    if (!rec.valid) continue;
    ++r.valid;
    for (int who = 0; who < 2; ++who) {
      const int seat = rec.agents[0] == info.agents[who] ? 0 : 1;
      if (rec.agents[seat] != info.agents[who]) {
        throw Error("record of " + info.id + " lacks agent " + info.agents[who]);
      }
      r.scores[who].push_back(MatchScore(info.game, *rec.outcome, seat));
    }
  }
  r.records = std::move(records);
  return r;
}

namespace report_internal {

inline std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

inline double Mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace report_internal

// All metric tables of a tournament. Pure function of the manifest and the
// records, so rebuilding from persisted logs gives identical files.
struct Report {
  std::vector<CompetitionResult> competitions;
  std::vector<GameId> games;        // games present, in catalogue order
  std::vector<std::string> agents;  // sorted
  // agent -> game -> mean NRA over its complete competitions in that game.
  std::map<std::string, std::map<GameId, double>> nra;
  std::map<std::string, double> avg_nra;
  // game -> agent -> rating after the chronological fold.
  std::map<GameId, std::map<std::string, double>> elo;
  std::vector<std::pair<std::string, std::string>> files;  // name, contents

  const std::string& File(const std::string& name) const {
    for (const auto& [n, c] : files) {
      if (n == name) return c;
    }
    throw Error("no report file " + name);
  }
};

inline Report BuildReport(const Manifest& manifest, const std::vector<MatchRecord>& records) {
  using report_internal::Fixed;
  Report rep;
  std::map<std::string, std::vector<MatchRecord>> by_competition;
  for (const auto& r : records) {
    if (!r.competition) throw Error("record without competition id");
    by_competition[*r.competition].push_back(r);
  }
  std::set<std::string> agents;
  std::set<GameId> games;
  for (const auto& info : manifest.competitions) {
    rep.competitions.push_back(Summarize(info, by_competition[info.id]));
    agents.insert(info.agents.begin(), info.agents.end());
    games.insert(info.game);
  }
  for (GameId g : kAllGames) {
    if (games.count(g)) rep.games.push_back(g);
  }
  rep.agents.assign(agents.begin(), agents.end());

  // NRA --------------------------------------------------------------------
  std::map<std::string, std::map<GameId, std::vector<double>>> cells;
  std::ostringstream pairs;
  pairs << "competition,game,agent,opponent,nra,valid\n";
  for (const auto& c : rep.competitions) {
    if (!c.complete() || c.valid == 0) continue;
    const double v = c.nra();
    const double mirrored = Nra(c.scores[1], c.scores[0]);
    cells[c.info.agents[0]][c.info.game].push_back(v);
    cells[c.info.agents[1]][c.info.game].push_back(mirrored);
    pairs << c.info.id << "," << GameName(c.info.game) << "," << c.info.agents[0] << ","
          << c.info.agents[1] << "," << Fixed(v) << "," << c.valid << "\n";
    pairs << c.info.id << "," << GameName(c.info.game) << "," << c.info.agents[1] << ","
          << c.info.agents[0] << "," << Fixed(mirrored) << "," << c.valid << "\n";
  }
  for (const auto& a : rep.agents) {
    std::vector<double> per_game;
    for (GameId g : rep.games) {
      auto it = cells[a].find(g);
      if (it == cells[a].end()) continue;
      rep.nra[a][g] = report_internal::Mean(it->second);
      per_game.push_back(rep.nra[a][g]);
    }
    if (!per_game.empty()) rep.avg_nra[a] = report_internal::Mean(per_game);
  }
  std::vector<std::string> ranked = rep.agents;
  std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    const bool ha = rep.avg_nra.count(a);
    const bool hb = rep.avg_nra.count(b);
    if (ha != hb) return ha;
    if (!ha) return a < b;
    if (rep.avg_nra[a] != rep.avg_nra[b]) return rep.avg_nra[a] > rep.avg_nra[b];
    return a < b;
  });
  std::ostringstream matrix;
  matrix << "agent";
  for (GameId g : rep.games) matrix << "," << GameName(g);
  matrix << ",avg\n";
  for (const auto& a : ranked) {
    matrix << a;
    for (GameId g : rep.games) {
      matrix << ",";
      if (rep.nra[a].count(g)) matrix << Fixed(rep.nra[a][g]);
    }
    matrix << ",";
    if (rep.avg_nra.count(a)) matrix << Fixed(rep.avg_nra[a]);
    matrix << "\n";
  }

  // Elo: per game, one update per valid match in chronological order.
  for (const auto& c : rep.competitions) {
    auto& table = rep.elo[c.info.game];
    for (const auto& name : c.info.agents) table.emplace(name, kEloInitial);
    for (const auto& rec : c.records) {
      if (!rec.valid) continue;
      auto& r0 = table[rec.agents[0]];
      auto& r1 = table[rec.agents[1]];
      std::tie(r0, r1) = EloUpdate(r0, r1, EloResult(*rec.outcome, 0));
    }
  }
  std::ostringstream elo;
  elo << "agent";
  for (GameId g : rep.games) elo << "," << GameName(g);
  elo << ",avg\n";
  for (const auto& a : rep.agents) {
    elo << a;
    std::vector<double> ratings;
    for (GameId g : rep.games) {
      elo << ",";
      auto it = rep.elo[g].find(a);
      if (it == rep.elo[g].end()) continue;
      elo << Fixed(it->second, 4);
      ratings.push_back(it->second);
    }
    elo << "," << Fixed(report_internal::Mean(ratings), 4) << "\n";
  }

  // Per-round series and agreements.
  std::ostringstream regret;
  regret << "competition,index,game,round,agent,regret\n";
  std::ostringstream system;
  system << "competition,index,game,round,agent_0,agent_1,reward_0,reward_1,system_reward\n";
  std::ostringstream pareto;
  pareto << "competition,index,agent_0,agent_1,value_0,value_1\n";
  std::map<std::string, std::pair<int, int>> deals;  // competition -> (deals, no deals)
  for (const auto& c : rep.competitions) {
    for (const auto& rec : c.records) {
      if (!rec.valid) continue;
      const int index = rec.index.value_or(0);
      for (const auto& rr : RecordRegrets(rec)) {
        for (int p = 0; p < 2; ++p) {
          regret << c.info.id << "," << index << "," << rec.game << "," << rr.round << ","
                 << rec.agents[p] << "," << rr.regret[p] << "\n";
        }
      }
      for (const auto& sr : RecordSystemRewards(rec)) {
        system << c.info.id << "," << index << "," << rec.game << "," << sr.round << ","
               << rec.agents[0] << "," << rec.agents[1] << "," << Fixed(sr.payoffs[0])
               << "," << Fixed(sr.payoffs[1]) << "," << Fixed(sr.system) << "\n";
      }
      if (c.info.game == GameId::kNegotiation) {
        auto point = RecordParetoPoint(rec);
        auto& [yes, no] = deals[c.info.id];
        if (!point) {
          ++no;
          continue;
        }
        ++yes;
        pareto << c.info.id << "," << index << "," << rec.agents[0] << ","
               << rec.agents[1] << "," << Fixed(point->x) << "," << Fixed(point->y)
               << "\n";
      }
    }
  }

  std::ostringstream completion;
  completion << "competition,game,agent_a,agent_b,valid,attempted,completion_rate,complete\n";
  for (const auto& c : rep.competitions) {
    completion << c.info.id << "," << GameName(c.info.game) << "," << c.info.agents[0]
               << "," << c.info.agents[1] << "," << c.valid << "," << c.attempted << ","
               << (c.attempted > 0 ? Fixed(c.completion_rate()) : "") << ","
               << (c.complete() ? "yes" : "no") << "\n";
  }

  std::ostringstream md;
  md << "# Leaderboard\n\nRanked by average NRA over games.\n\n| rank | agent | avg NRA |";
  for (GameId g : rep.games) md << " " << GameName(g) << " |";
  md << "\n|---|---|---|";
  for (std::size_t i = 0; i < rep.games.size(); ++i) md << "---|";
  md << "\n";
  int rank = 0;
  for (const auto& a : ranked) {
    md << "| " << ++rank << " | " << a << " | "
       << (rep.avg_nra.count(a) ? Fixed(rep.avg_nra[a], 3) : "") << " |";
    for (GameId g : rep.games) {
      md << " " << (rep.nra[a].count(g) ? Fixed(rep.nra[a][g], 3) : "") << " |";
    }
    md << "\n";
  }
  md << "\n## Competitions\n\n| competition | game | agent A | agent B | NRA (A) | valid | "
        "attempted | completion |\n|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : rep.competitions) {
    md << "| " << c.info.id << " | " << GameName(c.info.game) << " | " << c.info.agents[0]
       << " | " << c.info.agents[1] << " | "
       << (c.complete() && c.valid > 0 ? Fixed(c.nra(), 3) : "incomplete") << " | "
       << c.valid << " | " << c.attempted << " | "
       << (c.attempted > 0 ? Fixed(c.completion_rate(), 3) : "") << " |\n";
  }
  if (!deals.empty()) {
    md << "\n## Negotiation agreements\n\n| competition | deals | no deal |\n|---|---|---|\n";
    for (const auto& [id, counts] : deals) {
      md << "| " << id << " | " << counts.first << " | " << counts.second << " |\n";
    }
  }

  rep.files = {{"nra_matrix.csv", matrix.str()},     {"nra_pairs.csv", pairs.str()},
               {"elo.csv", elo.str()},               {"regret.csv", regret.str()},
               {"system_reward.csv", system.str()},  {"pareto_points.csv", pareto.str()},
               {"completion.csv", completion.str()}, {"leaderboard.md", md.str()}};
  return rep;
}

inline void WriteReport(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, contents] : report.files) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << contents;
  }
}

// Log layout --------------------------------------------------------------

inline constexpr std::string_view kManifestFile = "manifest.json";

// Reads every *.jsonl under `dir` (one record per line) and the manifest.
inline std::pair<Manifest, std::vector<MatchRecord>> LoadLogs(
    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("log directory not found: " + dir.string());
  std::ifstream mf(dir / std::string(kManifestFile));
  if (!mf) throw Error("manifest not found in " + dir.string());
  Manifest manifest = ManifestFromJson(Json::parse(mf));
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".jsonl") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<MatchRecord> records;
  for (const auto& f : files) {
    std::ifstream in(f);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) records.push_back(RecordFromJsonLine(line));
    }
  }
  return {std::move(manifest), std::move(records)};
}

}  // namespace gamearena

#endif  // GAMEARENA_REPORT_HPP_
