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

// Judgment datasets: loading, batch scoring and correlation with human
// judgments.
//
// Judgments are JSON lines. A record line looks like
//   {"id": "r1", "candidate": "s1", "references": ["s2", "s3"],
//    "system": "sysA", "human_score": 3,
//    "preference": {"pair": "p1", "role": "B", "prefers": "C"},
//    "caption": "optional display text"}
// where candidate and references are sentence ids in a companion CoNLL-U
// file. Per-system human judgments use a separate line kind:
//   {"kind": "system", "system": "sysA", "human": {"M1": 0.41, "M2": 0.3}}

#ifndef PROPEVAL_DATASETS_H_
#define PROPEVAL_DATASETS_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "propeval/conllu.h"
#include "propeval/lexicon.h"
#include "propeval/scoring.h"
#include "propeval/stats.h"

namespace propeval {

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PreferenceGroup {
  std::string pair_id;
  Preferred role = Preferred::kB;
  Preferred human_prefers = Preferred::kB;
};

struct JudgmentRecord {
  std::string id;
  int line = 0;
  std::string candidate_id;
  DependencyParse candidate;
  std::vector<std::string> reference_ids;
  std::vector<DependencyParse> references;
  std::optional<std::string> system;
  std::optional<double> human_score;
  std::optional<PreferenceGroup> preference;
  std::optional<std::string> caption;
};

// A record that could not be loaded or scored.
struct RecordIssue {
  int line = 0;           // 0 when not tied to an input line
  std::string record_id;  // empty when the id itself could not be read
  std::string message;

  std::string ToString() const;
};

struct JudgmentDataset {
  std::vector<JudgmentRecord> records;
  // system id -> question id -> human score
  std::map<std::string, std::map<std::string, double>> system_human;
  std::vector<RecordIssue> issues;
  int excluded = 0;  // records dropped as candidate-in-reference
};

struct LoadOptions {
  // Throw DatasetError on the first bad record instead of collecting it.
  bool strict = true;
  // Drop records whose candidate is one of their references (same sentence
  // id or same token sequence).
  bool exclude_candidate_in_reference = false;
};

using ParseIndex = std::unordered_map<std::string, DependencyParse>;

// Indexes parses by sentence id. Throws DatasetError on duplicate ids.
ParseIndex IndexParses(std::vector<DependencyParse> parses);

JudgmentDataset ReadJudgments(std::istream& in, const ParseIndex& parses,
                              const LoadOptions& options = {});

// Reads the judgments file and its companion CoNLL-U file. Unreadable files
// and malformed CoNLL-U always throw.
JudgmentDataset LoadJudgments(const std::filesystem::path& judgments,
                              const std::filesystem::path& parses,
                              const LoadOptions& options = {});

struct RecordResult {
  std::string id;
  ScoreReport report;
  std::optional<CaptionGraphs> graphs;
};

struct ScoredDataset {
  std::vector<RecordResult> results;  // dataset order, failed records omitted
  std::vector<RecordIssue> errors;
};

struct ScoreOptions {
  MatchMode mode = MatchMode::kSynonym;
  bool keep_graphs = false;
};

// Scores every record, in parallel over records. The output is identical
// to ScoreDatasetSerial.
ScoredDataset ScoreDataset(const JudgmentDataset& dataset, const Lexicon& lexicon,
                           const ScoreOptions& options = {});
ScoredDataset ScoreDatasetSerial(const JudgmentDataset& dataset,
                                 const Lexicon& lexicon,
                                 const ScoreOptions& options = {});

struct SystemSummary {
  std::string system_id;
  int captions = 0;
  double mean_metric = 0;  // mean per-caption F-score
  std::map<std::string, double> human_metric;
};

struct SystemLevelResult {
  std::string question;
  std::vector<SystemSummary> systems;  // sorted by system id
  Correlation correlation;
};

// Pearson correlation between per-system mean F-score and the per-system
// human score for `question`. Needs at least 3 systems.
SystemLevelResult SystemLevelEval(const JudgmentDataset& dataset,
                                  const ScoredDataset& scored,
                                  const std::string& question);

struct CaptionLevelResult {
  int captions = 0;
  double tau = 0;
};

// Kendall tau-b between per-caption F-scores and graded human scores.
CaptionLevelResult CaptionLevelEval(const JudgmentDataset& dataset,
                                    const ScoredDataset& scored);

struct PreferenceResult {
  int pairs = 0;
  double accuracy = 0;
};

// Pairwise accuracy over records grouped into B/C preference pairs.
PreferenceResult PreferenceEval(const JudgmentDataset& dataset,
                                const ScoredDataset& scored);

struct BreakdownRow {
  std::string key;  // system id, or "all"
  int captions = 0;
  PrfScore overall;
  std::map<TupleCategory, PrfScore> per_category;
};

// Per-system category scores from counts pooled over the system's captions.
// Records without a system id are grouped under "all".
std::vector<BreakdownRow> Breakdown(const JudgmentDataset& dataset,
                                    const ScoredDataset& scored);

}  // namespace propeval

#endif  // PROPEVAL_DATASETS_H_
