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

// Randomized inputs and brute-force oracles shared by the property tests
// and the acceptance suite.

#ifndef PROPEVAL_TESTS_GENERATORS_H_
#define PROPEVAL_TESTS_GENERATORS_H_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "propeval/conllu.h"
#include "propeval/lexicon.h"
#include "propeval/scene_graph.h"
#include "propeval/scoring.h"

namespace propeval::testing {

// --- Matching oracle ---

// A random synonym table over a small vocabulary, kept both as a Lexicon
// and as a plain membership map for the oracle.
struct RandomSynonyms {
  std::vector<std::string> vocabulary;
  std::map<std::string, std::set<int>> membership;
  Lexicon lexicon;
};

inline RandomSynonyms MakeRandomSynonyms(std::mt19937& rng) {
  RandomSynonyms out;
  const int vocab = std::uniform_int_distribution<>(4, 10)(rng);
  for (int i = 0; i < vocab; ++i) out.vocabulary.push_back("w" + std::to_string(i));
  SynonymLexicon synonyms;
  const int synsets = std::uniform_int_distribution<>(0, 5)(rng);
  for (int s = 0; s < synsets; ++s) {
    std::vector<std::string> members;
    const int size = std::uniform_int_distribution<>(2, 3)(rng);
    for (int k = 0; k < size; ++k) {
      members.push_back(out.vocabulary[std::uniform_int_distribution<>(0, vocab - 1)(rng)]);
    }
    for (const std::string& m : members) out.membership[m].insert(s);
    synonyms.AddSynset("syn." + std::to_string(s), members);
  }
  out.lexicon = Lexicon(std::move(synonyms), LemmaRules(), CategoryLists());
  return out;
}

inline TupleElement RandomElement(std::mt19937& rng, const RandomSynonyms& syn,
                                  bool object) {
  auto word = [&] {
    return syn.vocabulary[std::uniform_int_distribution<>(
        0, static_cast<int>(syn.vocabulary.size()) - 1)(rng)];
  };
  if (!object) return TupleElement::Word(word());
  ObjectNode node;
  node.canonical = word();
  node.aliases.insert(node.canonical);
  // Occasionally a merged reference object with an extra alias.
  if (std::bernoulli_distribution(0.3)(rng)) node.aliases.insert(word());
  return TupleElement::Object(node);
}

inline TupleSet RandomTupleSet(std::mt19937& rng, const RandomSynonyms& syn,
                               int max_size) {
  TupleSet set;
  const int n = std::uniform_int_distribution<>(0, max_size)(rng);
  for (int i = 0; i < n; ++i) {
    PropositionTuple t;
    const int arity = std::uniform_int_distribution<>(1, 3)(rng);
    t.elements.push_back(RandomElement(rng, syn, true));
    if (arity >= 2) t.elements.push_back(RandomElement(rng, syn, false));
    if (arity == 3) t.elements.push_back(RandomElement(rng, syn, true));
    set.Insert(std::move(t));
  }
  return set;
}

inline bool OracleElementsMatch(const TupleElement& a, const TupleElement& b,
                                bool synonyms, const RandomSynonyms& syn) {
  for (const std::string& x : a.aliases) {
    for (const std::string& y : b.aliases) {
      if (x == y) return true;
      if (!synonyms) continue;
      auto ix = syn.membership.find(x);
      auto iy = syn.membership.find(y);
      if (ix == syn.membership.end() || iy == syn.membership.end()) continue;
      for (int s : ix->second) {
        if (iy->second.count(s)) return true;
      }
    }
  }
  return false;
}

inline bool OracleTuplesMatch(const PropositionTuple& a, const PropositionTuple& b,
                              bool synonyms, const RandomSynonyms& syn) {
  if (a.arity() != b.arity()) return false;
  for (int i = 0; i < a.arity(); ++i) {
    if (!OracleElementsMatch(a.elements[i], b.elements[i], synonyms, syn)) return false;
  }
  return true;
}

// Maximum over every injective partial assignment of candidate tuples to
// reference tuples.
inline int BruteForceMatched(const TupleSet& cand, const TupleSet& ref, bool synonyms,
                             const RandomSynonyms& syn) {
  std::vector<bool> used(ref.size(), false);
  auto search = [&](auto& self, int i) -> int {
    if (i == cand.size()) return 0;
    int best = self(self, i + 1);
    for (int j = 0; j < ref.size(); ++j) {
      if (used[j] || !OracleTuplesMatch(cand[i], ref[j], synonyms, syn)) continue;
      used[j] = true;
      best = std::max(best, 1 + self(self, i + 1));
      used[j] = false;
    }
    return best;
  };
  return search(search, 0);
}

// --- Random scene graphs over the bundled lexicon ---

inline const std::vector<std::string>& GraphNouns() {
  static const std::vector<std::string> nouns{
      "pot", "pan", "veggie", "vegetable", "girl", "dog", "puppy", "man",
      "person", "table", "bus", "street"};
  return nouns;
}

inline const std::vector<std::string>& GraphAttributes() {
  static const std::vector<std::string> attributes{
      "red", "blue", "two", "three", "big", "large", "small", "little",
      "shiny", "young", "wooden", "standing"};
  return attributes;
}

inline const std::vector<std::string>& GraphRelations() {
  static const std::vector<std::string> relations{
      "on", "in", "have", "hold", "beside", "next-to", "ride", "on-top-of"};
  return relations;
}

inline SceneGraph RandomSceneGraph(std::mt19937& rng) {
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<>(0, static_cast<int>(v.size()) - 1)(rng)];
  };
  SceneGraph g;
  const int objects = std::uniform_int_distribution<>(0, 5)(rng);
  std::vector<ObjectId> ids;
  for (int i = 0; i < objects; ++i) ids.push_back(g.AddObject(pick(GraphNouns()), {0, i + 1}));
  if (ids.empty()) return g;
  auto any = [&] {
    return ids[std::uniform_int_distribution<>(0, static_cast<int>(ids.size()) - 1)(rng)];
  };
  const int attributes = std::uniform_int_distribution<>(0, 5)(rng);
  for (int i = 0; i < attributes; ++i) g.AddAttribute(any(), pick(GraphAttributes()));
  const int relations = std::uniform_int_distribution<>(0, 4)(rng);
  for (int i = 0; i < relations; ++i) g.AddRelation(any(), pick(GraphRelations()), any());
  return g;
}

// --- Synthetic multi-system caption dataset ---

struct SyntheticSlots {
  std::string adjective, subject, verb, color, object;
};

// "A <adjective> <subject> <verb> on a <color> <object> ."
inline DependencyParse SlotParse(const std::string& id, const SyntheticSlots& s) {
  DependencyParse p;
  p.sentence_id = id;
  auto add = [&](std::string form, std::string upos, int head, std::string deprel) {
    Token t;
    t.index = p.size() + 1;
    t.form = std::move(form);
    t.upos = std::move(upos);
    t.head = head;
    t.deprel = std::move(deprel);
    p.tokens.push_back(std::move(t));
  };
  add("A", "DET", 3, "det");
  add(s.adjective, "ADJ", 3, "amod");
  add(s.subject, "NOUN", 4, "nsubj");
  add(s.verb, "VERB", 0, "root");
  add("on", "ADP", 8, "case");
  add("a", "DET", 8, "det");
  add(s.color, "ADJ", 8, "amod");
  add(s.object, "NOUN", 4, "obl");
  add(".", "PUNCT", 4, "punct");
  return p;
}

struct SyntheticVocabulary {
  std::vector<std::string> adjectives{"young", "old", "small", "wet", "happy", "tired"};
  std::vector<std::string> subjects{"dog", "cat", "man", "woman", "girl",
                                    "boy", "horse", "bird", "bear", "cow"};
  std::vector<std::string> verbs{"sitting", "standing", "walking", "lying", "sleeping"};
  std::vector<std::string> colors{"red", "green", "blue", "white", "black", "brown"};
  std::vector<std::string> objects{"bench", "table", "field", "street", "bed",
                                   "grass", "beach", "rock"};
};

inline std::string PickOther(std::mt19937& rng, const std::vector<std::string>& words,
                             const std::string& avoid) {
  std::string w;
  do {
    w = words[std::uniform_int_distribution<>(0, static_cast<int>(words.size()) - 1)(rng)];
  } while (w == avoid);
  return w;
}

inline SyntheticSlots Corrupt(std::mt19937& rng, const SyntheticVocabulary& v,
                              SyntheticSlots s, double rate) {
  std::bernoulli_distribution flip(rate);
  if (flip(rng)) s.adjective = PickOther(rng, v.adjectives, s.adjective);
  if (flip(rng)) s.subject = PickOther(rng, v.subjects, s.subject);
  if (flip(rng)) s.verb = PickOther(rng, v.verbs, s.verb);
  if (flip(rng)) s.color = PickOther(rng, v.colors, s.color);
  if (flip(rng)) s.object = PickOther(rng, v.objects, s.object);
  return s;
}

struct SyntheticDataset {
  std::vector<DependencyParse> parses;
  std::string judgments;  // JSON lines
  std::vector<double> corruption;  // per system, increasing
};

// `systems` systems caption the same `images` images; system k replaces
// each content word independently with probability k / systems. Each image
// has three references: the truth and two single-slot paraphrases.
inline SyntheticDataset MakeSyntheticDataset(unsigned seed, int systems, int images) {
  std::mt19937 rng(seed);
  const SyntheticVocabulary v;
  SyntheticDataset out;
  std::vector<SyntheticSlots> truth;
  auto pick = [&](const std::vector<std::string>& words) {
    return words[std::uniform_int_distribution<>(0, static_cast<int>(words.size()) - 1)(rng)];
  };
  for (int i = 0; i < images; ++i) {
    SyntheticSlots s{pick(v.adjectives), pick(v.subjects), pick(v.verbs),
                     pick(v.colors), pick(v.objects)};
    truth.push_back(s);
    const std::string base = "img" + std::to_string(i);
    SyntheticSlots alt1 = s;
    alt1.adjective = PickOther(rng, v.adjectives, s.adjective);
    SyntheticSlots alt2 = s;
    alt2.color = PickOther(rng, v.colors, s.color);
    out.parses.push_back(SlotParse(base + "_ref0", s));
    out.parses.push_back(SlotParse(base + "_ref1", alt1));
    out.parses.push_back(SlotParse(base + "_ref2", alt2));
  }
  for (int k = 0; k < systems; ++k) {
    const double rate = static_cast<double>(k) / systems;
    out.corruption.push_back(rate);
    const std::string system = "sys" + std::to_string(k);
    out.judgments += R"({"kind": "system", "system": ")" + system +
                     R"(", "human": {"corruption": )" + std::to_string(rate) + "}}\n";
    for (int i = 0; i < images; ++i) {
      const std::string base = "img" + std::to_string(i);
      const std::string cand = system + "_" + base;
      out.parses.push_back(SlotParse(cand, Corrupt(rng, v, truth[i], rate)));
      out.judgments += R"({"id": ")" + cand + R"(", "candidate": ")" + cand +
                       R"(", "references": [")" + base + R"(_ref0", ")" + base +
                       R"(_ref1", ")" + base + R"(_ref2"], "system": ")" + system +
                       "\"}\n";
    }
  }
  return out;
}

}  // namespace propeval::testing

#endif  // PROPEVAL_TESTS_GENERATORS_H_
