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

// Proposition tuples and the tuple F-score.
//
// A scene graph becomes a set of 1-tuples (objects), 2-tuples (object,
// attribute) and 3-tuples (subject, relation, object). Two tuples match only
// if every position matches; the matched count is a maximum one-to-one
// matching between candidate and reference tuples.

#ifndef PROPEVAL_SCORING_H_
#define PROPEVAL_SCORING_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propeval/conllu.h"
#include "propeval/lexicon.h"
#include "propeval/scene_graph.h"

namespace propeval {

enum class MatchMode { kExact, kSynonym };

std::string_view MatchModeName(MatchMode mode);
std::optional<MatchMode> ParseMatchMode(std::string_view name);

// One tuple position. Object positions carry the node's alias set;
// attribute and relation positions carry a single lemma.
struct TupleElement {
  std::string canonical;
  std::vector<std::string> aliases;  // sorted, contains canonical

  static TupleElement Word(std::string lemma);
  static TupleElement Object(const ObjectNode& node);
  bool operator==(const TupleElement&) const = default;
};

struct PropositionTuple {
  std::vector<TupleElement> elements;

  int arity() const { return static_cast<int>(elements.size()); }
  // Canonical-lemma projection, used for deduplication.
  std::vector<std::string> Key() const;
  std::string ToString() const;  // "(girl, on-top-of, court)"
};

// Tuples deduplicated by canonical projection, in insertion order.
class TupleSet {
 public:
  // Returns false if a tuple with the same projection is already present.
  bool Insert(PropositionTuple tuple);

  const std::vector<PropositionTuple>& tuples() const { return tuples_; }
  const PropositionTuple& operator[](int i) const { return tuples_.at(i); }
  int size() const { return static_cast<int>(tuples_.size()); }
  bool empty() const { return tuples_.empty(); }

 private:
  std::vector<PropositionTuple> tuples_;
  std::map<std::vector<std::string>, int> index_;
};

TupleSet TuplesOf(const SceneGraph& graph);

bool ElementsMatch(const TupleElement& a, const TupleElement& b, MatchMode mode,
                   const Lexicon& lexicon);

// Same arity and every position matches.
bool TuplesMatch(const PropositionTuple& a, const PropositionTuple& b,
                 MatchMode mode, const Lexicon& lexicon);

struct TupleMatching {
  int matched = 0;
  std::vector<std::pair<int, int>> pairs;  // (candidate, reference), sorted
};

TupleMatching MatchTuples(const TupleSet& candidate, const TupleSet& reference,
                          MatchMode mode, const Lexicon& lexicon);

enum class TupleCategory { kObject, kRelation, kAttribute, kColor, kCount, kSize };

inline constexpr TupleCategory kAllCategories[] = {
    TupleCategory::kObject, TupleCategory::kRelation, TupleCategory::kAttribute,
    TupleCategory::kColor,  TupleCategory::kCount,    TupleCategory::kSize};

std::string_view CategoryName(TupleCategory category);

bool InCategory(const PropositionTuple& tuple, TupleCategory category,
                const Lexicon& lexicon);

// Precision, recall and F over match counts. When both totals are zero all
// three are 1; when exactly one is zero all three are 0.
struct PrfScore {
  double precision = 0;
  double recall = 0;
  double f_score = 0;
  int matched = 0;
  int candidate_total = 0;
  int reference_total = 0;

  static PrfScore FromCounts(int matched, int candidate_total,
                             int reference_total);
  PrfScore& operator+=(const PrfScore& other);  // pools counts, recomputes
};

struct ScoreReport {
  PrfScore overall;
  std::map<TupleCategory, PrfScore> per_category;
};

// Per-category scores. A matched pair counts for a category only when both
// of its tuples belong to it.
std::map<TupleCategory, PrfScore> SubcategoryScores(const TupleSet& candidate,
                                                    const TupleSet& reference,
                                                    const TupleMatching& matching,
                                                    const Lexicon& lexicon);

ScoreReport ScoreTuples(const TupleSet& candidate, const TupleSet& reference,
                        MatchMode mode, const Lexicon& lexicon);

// Full pipeline for one candidate caption against its references.
struct CaptionGraphs {
  SceneGraph candidate;
  SceneGraph reference;  // merged
};
CaptionGraphs BuildCaptionGraphs(const DependencyParse& candidate,
                                 std::span<const DependencyParse> references,
                                 const Lexicon& lexicon);
ScoreReport ScoreGraphs(const CaptionGraphs& graphs, MatchMode mode,
                        const Lexicon& lexicon);

}  // namespace propeval

#endif  // PROPEVAL_SCORING_H_
