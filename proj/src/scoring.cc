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

#include "propeval/scoring.h"

#include <algorithm>

#include "propeval/bipartite.h"

namespace propeval {

std::string_view MatchModeName(MatchMode mode) {
  return mode == MatchMode::kExact ? "exact" : "synonym";
}

std::optional<MatchMode> ParseMatchMode(std::string_view name) {
  if (name == "exact") return MatchMode::kExact;
  if (name == "synonym") return MatchMode::kSynonym;
  return std::nullopt;
}

TupleElement TupleElement::Word(std::string lemma) {
  TupleElement element;
  element.aliases = {lemma};
  element.canonical = std::move(lemma);
  return element;
}

TupleElement TupleElement::Object(const ObjectNode& node) {
  TupleElement element;
  element.canonical = node.canonical;
  element.aliases.assign(node.aliases.begin(), node.aliases.end());
  if (!std::binary_search(element.aliases.begin(), element.aliases.end(),
                          node.canonical)) {
    element.aliases.insert(std::lower_bound(element.aliases.begin(),
                                            element.aliases.end(),
                                            node.canonical),
                           node.canonical);
  }
  return element;
}

std::vector<std::string> PropositionTuple::Key() const {
  std::vector<std::string> key;
  key.reserve(elements.size());
  for (const TupleElement& e : elements) key.push_back(e.canonical);
  return key;
}

std::string PropositionTuple::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += elements[i].canonical;
  }
  return out + ")";
}

bool TupleSet::Insert(PropositionTuple tuple) {
  auto [it, inserted] = index_.emplace(tuple.Key(), size());
  if (!inserted) return false;
  tuples_.push_back(std::move(tuple));
  return true;
}

TupleSet TuplesOf(const SceneGraph& graph) {
  TupleSet set;
  for (const ObjectNode& node : graph.objects()) {
    set.Insert({{TupleElement::Object(node)}});
  }
  for (const AttributeBinding& a : graph.attributes()) {
    set.Insert({{TupleElement::Object(graph.object(a.object)),
                 TupleElement::Word(a.attribute)}});
  }
  for (const RelationEdge& r : graph.relations()) {
    set.Insert({{TupleElement::Object(graph.object(r.subject)),
                 TupleElement::Word(r.relation),
                 TupleElement::Object(graph.object(r.object))}});
  }
  return set;
}

bool ElementsMatch(const TupleElement& a, const TupleElement& b, MatchMode mode,
                   const Lexicon& lexicon) {
  for (const std::string& x : a.aliases) {
    for (const std::string& y : b.aliases) {
      if (x == y) return true;
      if (mode == MatchMode::kSynonym && lexicon.SameSynset(x, y)) return true;
    }
  }
  return false;
}

bool TuplesMatch(const PropositionTuple& a, const PropositionTuple& b,
                 MatchMode mode, const Lexicon& lexicon) {
  if (a.arity() != b.arity()) return false;
  for (int i = 0; i < a.arity(); ++i) {
    if (!ElementsMatch(a.elements[i], b.elements[i], mode, lexicon)) return false;
  }
  return true;
}

TupleMatching MatchTuples(const TupleSet& candidate, const TupleSet& reference,
                          MatchMode mode, const Lexicon& lexicon) {
  std::vector<std::vector<int>> adjacency(candidate.size());
  for (int i = 0; i < candidate.size(); ++i) {
    for (int j = 0; j < reference.size(); ++j) {
      if (TuplesMatch(candidate[i], reference[j], mode, lexicon)) {
        adjacency[i].push_back(j);
      }
    }
  }
  BipartiteMatching matching = MaximumMatching(adjacency, reference.size());
  TupleMatching result;
  result.matched = matching.size;
  for (int i = 0; i < candidate.size(); ++i) {
    if (matching.left_to_right[i] != kUnmatched) {
      result.pairs.emplace_back(i, matching.left_to_right[i]);
    }
  }
  return result;
}

std::string_view CategoryName(TupleCategory category) {
  switch (category) {
    case TupleCategory::kObject: return "object";
    case TupleCategory::kRelation: return "relation";
    case TupleCategory::kAttribute: return "attribute";
    case TupleCategory::kColor: return "color";
    case TupleCategory::kCount: return "count";
    case TupleCategory::kSize: return "size";
  }
  return "object";
}

bool InCategory(const PropositionTuple& tuple, TupleCategory category,
                const Lexicon& lexicon) {
  switch (category) {
    case TupleCategory::kObject: return tuple.arity() == 1;
    case TupleCategory::kRelation: return tuple.arity() == 3;
    case TupleCategory::kAttribute: return tuple.arity() == 2;
    case TupleCategory::kColor:
    case TupleCategory::kCount:
    case TupleCategory::kSize:
      break;
  }
  if (tuple.arity() != 2) return false;
  const AttributeCategory kind = lexicon.Categorize(tuple.elements[1].canonical);
  switch (category) {
    case TupleCategory::kColor: return kind == AttributeCategory::kColor;
    case TupleCategory::kCount: return kind == AttributeCategory::kCount;
    case TupleCategory::kSize: return kind == AttributeCategory::kSize;
    default: return false;
  }
}

PrfScore PrfScore::FromCounts(int matched, int candidate_total,
                              int reference_total) {
  PrfScore s;
  s.matched = matched;
  s.candidate_total = candidate_total;
  s.reference_total = reference_total;
  if (candidate_total == 0 && reference_total == 0) {
    s.precision = s.recall = s.f_score = 1.0;
    return s;
  }
  if (candidate_total == 0 || reference_total == 0) return s;
  s.precision = static_cast<double>(matched) / candidate_total;
  s.recall = static_cast<double>(matched) / reference_total;
  // 2PR / (P + R) in count form, which is exactly symmetric in the totals.
  s.f_score = 2.0 * matched / (candidate_total + reference_total);
  return s;
}

PrfScore& PrfScore::operator+=(const PrfScore& other) {
  *this = FromCounts(matched + other.matched,
                     candidate_total + other.candidate_total,
                     reference_total + other.reference_total);
  return *this;
}

std::map<TupleCategory, PrfScore> SubcategoryScores(const TupleSet& candidate,
                                                    const TupleSet& reference,
                                                    const TupleMatching& matching,
                                                    const Lexicon& lexicon) {
  std::map<TupleCategory, PrfScore> scores;
  for (TupleCategory category : kAllCategories) {
    auto count = [&](const TupleSet& set) {
      return static_cast<int>(std::count_if(
          set.tuples().begin(), set.tuples().end(),
          [&](const PropositionTuple& t) { return InCategory(t, category, lexicon); }));
    };
    int matched = 0;
    for (auto [c, r] : matching.pairs) {
      if (InCategory(candidate[c], category, lexicon) &&
          InCategory(reference[r], category, lexicon)) {
        ++matched;
      }
    }
    scores[category] = PrfScore::FromCounts(matched, count(candidate), count(reference));
  }
  return scores;
}

ScoreReport ScoreTuples(const TupleSet& candidate, const TupleSet& reference,
                        MatchMode mode, const Lexicon& lexicon) {
  TupleMatching matching = MatchTuples(candidate, reference, mode, lexicon);
  ScoreReport report;
  report.overall =
      PrfScore::FromCounts(matching.matched, candidate.size(), reference.size());
  report.per_category = SubcategoryScores(candidate, reference, matching, lexicon);
  return report;
}

CaptionGraphs BuildCaptionGraphs(const DependencyParse& candidate,
                                 std::span<const DependencyParse> references,
                                 const Lexicon& lexicon) {
  std::vector<SceneGraph> reference_graphs;
  reference_graphs.reserve(references.size());
  for (const DependencyParse& r : references) {
    reference_graphs.push_back(ParseCaption(r, lexicon));
  }
  return {ParseCaption(candidate, lexicon),
          MergeReferenceGraphs(reference_graphs, lexicon)};
}

ScoreReport ScoreGraphs(const CaptionGraphs& graphs, MatchMode mode,
                        const Lexicon& lexicon) {
  return ScoreTuples(TuplesOf(graphs.candidate), TuplesOf(graphs.reference), mode,
                     lexicon);
}

}  // namespace propeval
