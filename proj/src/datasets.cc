// Copyright 2026 The Propeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "propeval/datasets.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace propeval {
namespace {

using nlohmann::json;

// A per-record problem; becomes a RecordIssue or a DatasetError.
struct RecordProblem {
  std::string record_id;
  std::string message;
};

std::string RequireString(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw RecordProblem{"", std::string("missing \"") + key + "\""};
  if (!it->is_string()) {
    throw RecordProblem{"", std::string("\"") + key + "\" must be a string"};
  }
  return it->get<std::string>();
}

Preferred ParseRole(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string() ||
      (*it != "B" && *it != "C")) {
    throw RecordProblem{"", std::string("\"") + key + "\" must be \"B\" or \"C\""};
  }
  return *it == "B" ? Preferred::kB : Preferred::kC;
}

std::string SurfaceKey(const DependencyParse& parse) {
  std::string key;
  for (const Token& t : parse.tokens) {
    if (t.upos == "PUNCT") continue;
    if (!key.empty()) key += ' ';
    key += ToLower(t.form);
  }
  return key;
}

const DependencyParse& Resolve(const ParseIndex& parses, const std::string& id) {
  auto it = parses.find(id);
  if (it == parses.end()) {
    throw RecordProblem{"", "unknown sentence id '" + id + "'"};
  }
  return it->second;
}

void ParseSystemLine(const json& j, JudgmentDataset& dataset) {
  std::string system = RequireString(j, "system");
  auto human = j.find("human");
  if (human == j.end() || !human->is_object() || human->empty()) {
    throw RecordProblem{system, "system line needs a nonempty \"human\" object"};
  }
  auto& scores = dataset.system_human[system];
  for (auto& [question, value] : human->items()) {
    if (!value.is_number()) {
      throw RecordProblem{system, "human score for '" + question + "' is not a number"};
    }
    scores[question] = value.get<double>();
  }
}

JudgmentRecord ParseRecordLine(const json& j, const ParseIndex& parses) {
  JudgmentRecord record;
  record.id = RequireString(j, "id");
  try {
    record.candidate_id = RequireString(j, "candidate");
    auto refs = j.find("references");
    if (refs == j.end() || !refs->is_array()) {
      throw RecordProblem{"", "\"references\" must be an array of sentence ids"};
    }
    if (refs->empty()) throw RecordProblem{"", "\"references\" is empty"};
    for (const json& r : *refs) {
      if (!r.is_string()) throw RecordProblem{"", "reference ids must be strings"};
      record.reference_ids.push_back(r.get<std::string>());
    }
    if (auto it = j.find("system"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw RecordProblem{"", "\"system\" must be a string"};
      record.system = it->get<std::string>();
    }
    if (auto it = j.find("human_score"); it != j.end() && !it->is_null()) {
      if (!it->is_number()) throw RecordProblem{"", "\"human_score\" must be a number"};
      record.human_score = it->get<double>();
    }
    if (auto it = j.find("preference"); it != j.end() && !it->is_null()) {
      if (!it->is_object()) throw RecordProblem{"", "\"preference\" must be an object"};
      PreferenceGroup group;
      group.pair_id = RequireString(*it, "pair");
      group.role = ParseRole(*it, "role");
      group.human_prefers = ParseRole(*it, "prefers");
      record.preference = std::move(group);
    }
    if (auto it = j.find("caption"); it != j.end() && it->is_string()) {
      record.caption = it->get<std::string>();
    }
    record.candidate = Resolve(parses, record.candidate_id);
    for (const std::string& id : record.reference_ids) {
      record.references.push_back(Resolve(parses, id));
    }
  } catch (RecordProblem& problem) {
    problem.record_id = record.id;
    throw;
  }
  return record;
}

bool CandidateInReferences(const JudgmentRecord& record) {
  const std::string surface = SurfaceKey(record.candidate);
  for (size_t i = 0; i < record.references.size(); ++i) {
    if (record.reference_ids[i] == record.candidate_id) return true;
    if (SurfaceKey(record.references[i]) == surface) return true;
  }
  return false;
}

RecordResult ScoreRecord(const JudgmentRecord& record, const Lexicon& lexicon,
                         const ScoreOptions& options) {
  RecordResult result;
  result.id = record.id;
  CaptionGraphs graphs =
      BuildCaptionGraphs(record.candidate, record.references, lexicon);
  result.report = ScoreGraphs(graphs, options.mode, lexicon);
  if (options.keep_graphs) result.graphs = std::move(graphs);
  return result;
}

// Per-record outcome slot filled by the scoring loops.
struct Slot {
  std::optional<RecordResult> result;
  std::optional<RecordIssue> error;
};

void ScoreSlot(const JudgmentRecord& record, const Lexicon& lexicon,
               const ScoreOptions& options, Slot& slot) {
  try {
    slot.result = ScoreRecord(record, lexicon, options);
  } catch (const std::exception& e) {
    slot.error = RecordIssue{record.line, record.id, e.what()};
  }
}

ScoredDataset Collect(std::vector<Slot>& slots) {
  ScoredDataset scored;
  for (Slot& slot : slots) {
    if (slot.result) scored.results.push_back(std::move(*slot.result));
    if (slot.error) scored.errors.push_back(std::move(*slot.error));
  }
  return scored;
}

std::unordered_map<std::string, const RecordResult*> ResultsById(
    const ScoredDataset& scored) {
  std::unordered_map<std::string, const RecordResult*> by_id;
  for (const RecordResult& r : scored.results) by_id.emplace(r.id, &r);
  return by_id;
}

}  // namespace

std::string RecordIssue::ToString() const {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!record_id.empty()) out += "record '" + record_id + "': ";
  return out + message;
}

ParseIndex IndexParses(std::vector<DependencyParse> parses) {
  ParseIndex index;
  for (DependencyParse& p : parses) {
    std::string id = p.sentence_id;
    if (!index.emplace(id, std::move(p)).second) {
      throw DatasetError("duplicate sentence id '" + id + "' in parses");
    }
  }
  return index;
}

JudgmentDataset ReadJudgments(std::istream& in, const ParseIndex& parses,
                              const LoadOptions& options) {
  JudgmentDataset dataset;
  std::set<std::string> record_ids;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw RecordProblem{"", std::string("invalid JSON: ") + e.what()};
      }
      if (!j.is_object()) throw RecordProblem{"", "line is not a JSON object"};
      std::string kind = "record";
      if (auto it = j.find("kind"); it != j.end()) {
        if (!it->is_string()) throw RecordProblem{"", "\"kind\" must be a string"};
        kind = it->get<std::string>();
      }
      if (kind == "system") {
        ParseSystemLine(j, dataset);
        continue;
      }
      if (kind != "record") throw RecordProblem{"", "unknown kind '" + kind + "'"};
      JudgmentRecord record = ParseRecordLine(j, parses);
      record.line = line;
      if (!record_ids.insert(record.id).second) {
        throw RecordProblem{record.id, "duplicate record id"};
      }
      if (options.exclude_candidate_in_reference && CandidateInReferences(record)) {
        ++dataset.excluded;
        continue;
      }
      dataset.records.push_back(std::move(record));
    } catch (const RecordProblem& problem) {
      RecordIssue issue{line, problem.record_id, problem.message};
      if (options.strict) throw DatasetError(issue.ToString());
      dataset.issues.push_back(std::move(issue));
    }
  }
  return dataset;
}

JudgmentDataset LoadJudgments(const std::filesystem::path& judgments,
                              const std::filesystem::path& parses,
                              const LoadOptions& options) {
  ParseIndex index = IndexParses(ReadConlluFile(parses.string()));
  std::ifstream in(judgments);
  if (!in) {
    throw DatasetError("cannot open judgments file '" + judgments.string() + "'");
  }
  return ReadJudgments(in, index, options);
}

ScoredDataset ScoreDataset(const JudgmentDataset& dataset, const Lexicon& lexicon,
                           const ScoreOptions& options) {
  std::vector<Slot> slots(dataset.records.size());
  const long n = static_cast<long>(dataset.records.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    ScoreSlot(dataset.records[i], lexicon, options, slots[i]);
  }
  return Collect(slots);
}

ScoredDataset ScoreDatasetSerial(const JudgmentDataset& dataset,
                                 const Lexicon& lexicon,
                                 const ScoreOptions& options) {
  std::vector<Slot> slots(dataset.records.size());
  for (size_t i = 0; i < dataset.records.size(); ++i) {
    ScoreSlot(dataset.records[i], lexicon, options, slots[i]);
  }
  return Collect(slots);
}

SystemLevelResult SystemLevelEval(const JudgmentDataset& dataset,
                                  const ScoredDataset& scored,
                                  const std::string& question) {
  auto by_id = ResultsById(scored);
  std::map<std::string, std::pair<double, int>> sums;
  for (const JudgmentRecord& record : dataset.records) {
    if (!record.system) {
      throw DatasetError("record '" + record.id +
                         "' has no system id; system-level analysis needs one");
    }
    auto it = by_id.find(record.id);
    if (it == by_id.end()) continue;
    auto& [sum, count] = sums[*record.system];
    sum += it->second->report.overall.f_score;
    ++count;
  }
  SystemLevelResult result;
  result.question = question;
  std::vector<double> metric, human;
  for (const auto& [system, sum_count] : sums) {
    auto judged = dataset.system_human.find(system);
    if (judged == dataset.system_human.end() || !judged->second.count(question)) {
      throw DatasetError("system '" + system + "' has no human score for '" +
                         question + "'");
    }
    SystemSummary summary;
    summary.system_id = system;
    summary.captions = sum_count.second;
    summary.mean_metric = sum_count.first / sum_count.second;
    summary.human_metric = judged->second;
    metric.push_back(summary.mean_metric);
    human.push_back(judged->second.at(question));
    result.systems.push_back(std::move(summary));
  }
  if (result.systems.size() < 3) {
    throw DatasetError("insufficient data: system-level correlation needs at "
                       "least 3 systems, found " +
                       std::to_string(result.systems.size()));
  }
  result.correlation = Pearson(metric, human);
  return result;
}

CaptionLevelResult CaptionLevelEval(const JudgmentDataset& dataset,
                                    const ScoredDataset& scored) {
  auto by_id = ResultsById(scored);
  std::vector<double> metric, human;
  for (const JudgmentRecord& record : dataset.records) {
    if (!record.human_score) {
      throw DatasetError("record '" + record.id +
                         "' has no human_score; caption-level analysis needs "
                         "graded scores");
    }
    auto it = by_id.find(record.id);
    if (it == by_id.end()) continue;
    metric.push_back(it->second->report.overall.f_score);
    human.push_back(*record.human_score);
  }
  if (metric.size() < 2) {
    throw DatasetError("insufficient data: caption-level correlation needs at "
                       "least 2 scored records");
  }
  return {static_cast<int>(metric.size()), KendallTauB(metric, human)};
}

PreferenceResult PreferenceEval(const JudgmentDataset& dataset,
                                const ScoredDataset& scored) {
  auto by_id = ResultsById(scored);
  struct Members {
    const JudgmentRecord* b = nullptr;
    const JudgmentRecord* c = nullptr;
  };
  std::map<std::string, Members> groups;
  for (const JudgmentRecord& record : dataset.records) {
    if (!record.preference) {
      throw DatasetError("record '" + record.id +
                         "' has no preference group; preference analysis "
                         "needs B/C pairs");
    }
    Members& members = groups[record.preference->pair_id];
    const JudgmentRecord*& slot =
        record.preference->role == Preferred::kB ? members.b : members.c;
    if (slot) {
      throw DatasetError("pair '" + record.preference->pair_id +
                         "' has two members in the same role");
    }
    slot = &record;
  }
  std::vector<PreferencePair> pairs;
  for (const auto& [pair_id, members] : groups) {
    if (!members.b || !members.c) {
      throw DatasetError("pair '" + pair_id + "' is missing its " +
                         (members.b ? "C" : "B") + " member");
    }
    if (members.b->preference->human_prefers !=
        members.c->preference->human_prefers) {
      throw DatasetError("pair '" + pair_id +
                         "' members disagree on the human preference");
    }
    auto b = by_id.find(members.b->id);
    auto c = by_id.find(members.c->id);
    if (b == by_id.end() || c == by_id.end()) continue;
    pairs.push_back({b->second->report.overall.f_score,
                     c->second->report.overall.f_score,
                     members.b->preference->human_prefers});
  }
  if (pairs.empty()) throw DatasetError("insufficient data: no scored pairs");
  return {static_cast<int>(pairs.size()), PairwiseAccuracy(pairs)};
}

std::vector<BreakdownRow> Breakdown(const JudgmentDataset& dataset,
                                    const ScoredDataset& scored) {
  auto by_id = ResultsById(scored);
  std::map<std::string, BreakdownRow> rows;
  for (const JudgmentRecord& record : dataset.records) {
    auto it = by_id.find(record.id);
    if (it == by_id.end()) continue;
    const std::string key = record.system ? *record.system : "all";
    BreakdownRow& row = rows[key];
    if (row.captions == 0) {
      row.key = key;
      row.overall = PrfScore::FromCounts(0, 0, 0);
      for (TupleCategory c : kAllCategories) {
        row.per_category[c] = PrfScore::FromCounts(0, 0, 0);
      }
    }
    ++row.captions;
    row.overall += it->second->report.overall;
    for (const auto& [category, score] : it->second->report.per_category) {
      row.per_category[category] += score;
    }
  }
  std::vector<BreakdownRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace propeval
