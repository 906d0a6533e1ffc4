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

// Scene graphs: objects, attributes of objects, and relations between
// objects, extracted from a dependency parse by a fixed rule table.
//
// Extraction rules, applied to the post-processed parse:
//   R1 amod               attribute on the governing noun
//   R2 nsubj + cop        attribute (adjective predicate) or relation
//                         (subject, be, noun predicate)
//   R3 nsubj + verb + obj relation (subject, verb, object)
//   R4 nmod/obl + case    relation (governor's object, preposition, nominal);
//                         case sequences and "top of" chains hyphen-join
//   R5 nmod:poss          relation (possessor, have, possessed)
//   R6 compound           attribute on the head noun
//   R7 nummod             count attribute
//   R8 verb without obj   attribute on the subject (also acl participles)
//   R9 noun coverage      every remaining noun is a bare object
// Determiners, auxiliaries and punctuation are ignored. Objects are keyed by
// lemma, so plural and repeated mentions collapse onto one node.

#ifndef PROPEVAL_SCENE_GRAPH_H_
#define PROPEVAL_SCENE_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/conllu.h"
#include "propeval/lexicon.h"

namespace propeval {

enum class ObjectId : int {};

inline int ToIndex(ObjectId id) { return static_cast<int>(id); }

// A token in one of several captions; `caption` is 0 for a single caption
// and the position in the reference list after merging.
struct TokenRef {
  int caption = 0;
  int index = 0;
  auto operator<=>(const TokenRef&) const = default;
};

struct ObjectNode {
  ObjectId id{};
  std::string canonical;
  std::set<std::string> aliases;     // always contains canonical
  std::set<TokenRef> source_tokens;
};

struct AttributeBinding {
  ObjectId object{};
  std::string attribute;
  auto operator<=>(const AttributeBinding&) const = default;
};

struct RelationEdge {
  ObjectId subject{};
  std::string relation;
  ObjectId object{};
  auto operator<=>(const RelationEdge&) const = default;
};

class SceneGraph {
 public:
  // Returns the node whose canonical lemma is `lemma`, creating it if needed.
  ObjectId AddObject(std::string_view lemma);
  ObjectId AddObject(std::string_view lemma, TokenRef source);
  // Adds an object node with a full alias set. `canonical` must not already
  // be a canonical lemma in the graph.
  ObjectId AddMergedObject(std::string canonical, std::set<std::string> aliases,
                           std::set<TokenRef> sources);
  void AddSourceToken(ObjectId id, TokenRef source);

  // Duplicate attributes and relations are ignored, as are self-loops.
  void AddAttribute(ObjectId object, std::string_view attribute);
  void AddRelation(ObjectId subject, std::string_view relation, ObjectId object);

  std::optional<ObjectId> FindObject(std::string_view canonical) const;
  const ObjectNode& object(ObjectId id) const { return objects_.at(ToIndex(id)); }

  const std::vector<ObjectNode>& objects() const { return objects_; }
  const std::vector<AttributeBinding>& attributes() const { return attributes_; }
  const std::vector<RelationEdge>& relations() const { return relations_; }

  bool empty() const { return objects_.empty(); }

 private:
  std::vector<ObjectNode> objects_;
  std::map<std::string, ObjectId, std::less<>> by_canonical_;
  std::vector<AttributeBinding> attributes_;
  std::vector<RelationEdge> relations_;
  std::set<AttributeBinding> attribute_index_;
  std::set<RelationEdge> relation_index_;
};

// Lemma used for a token: the LEMMA column when present, otherwise the
// lexicon's lemmatizer. Always lowercase.
std::string TokenLemma(const Token& token, const Lexicon& lexicon);

// True for tokens that denote objects (NOUN and PROPN).
bool IsNounToken(const Token& token);

// Collapses quantifier phrases ("a lot of", "lots of", "plenty of",
// "a couple of", "a number of", "a bunch of") onto the quantified noun.
// The quantifier tokens are removed and the result is renumbered.
DependencyParse SimplifyQuantifiers(const DependencyParse& parse);

// Relabels each third-person pronoun with the lemma of the nearest
// preceding noun and retags it as NOUN. Pronouns with no preceding noun
// are left alone.
DependencyParse ResolvePronouns(const DependencyParse& parse,
                                const Lexicon& lexicon);

// Applies the extraction rules to an already post-processed parse. Both
// builders throw StructureError if the parse is not a tree.
SceneGraph BuildSceneGraph(const DependencyParse& parse, const Lexicon& lexicon);

// SimplifyQuantifiers, ResolvePronouns, then BuildSceneGraph.
SceneGraph ParseCaption(const DependencyParse& parse, const Lexicon& lexicon);

// Union of reference graphs. Objects whose lemmas are equal or synonymous
// are merged (transitively); the canonical label is the lemma of the
// earliest member in graph order, then token order.
SceneGraph MergeReferenceGraphs(std::span<const SceneGraph> graphs,
                                const Lexicon& lexicon);

}  // namespace propeval

#endif  // PROPEVAL_SCENE_GRAPH_H_
