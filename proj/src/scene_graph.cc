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

#include "propeval/scene_graph.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace propeval {

// --- SceneGraph ---

ObjectId SceneGraph::AddObject(std::string_view lemma) {
  if (auto existing = FindObject(lemma)) return *existing;
  ObjectId id{static_cast<int>(objects_.size())};
  ObjectNode node;
  node.id = id;
  node.canonical = std::string(lemma);
  node.aliases.insert(node.canonical);
  objects_.push_back(std::move(node));
  by_canonical_.emplace(std::string(lemma), id);
  return id;
}

ObjectId SceneGraph::AddObject(std::string_view lemma, TokenRef source) {
  ObjectId id = AddObject(lemma);
  AddSourceToken(id, source);
  return id;
}

ObjectId SceneGraph::AddMergedObject(std::string canonical,
                                     std::set<std::string> aliases,
                                     std::set<TokenRef> sources) {
  if (FindObject(canonical)) {
    throw std::logic_error("duplicate canonical object '" + canonical + "'");
  }
  ObjectId id{static_cast<int>(objects_.size())};
  aliases.insert(canonical);
  by_canonical_.emplace(canonical, id);
  objects_.push_back({id, std::move(canonical), std::move(aliases),
                      std::move(sources)});
  return id;
}

void SceneGraph::AddSourceToken(ObjectId id, TokenRef source) {
  objects_.at(ToIndex(id)).source_tokens.insert(source);
}

void SceneGraph::AddAttribute(ObjectId object, std::string_view attribute) {
  AttributeBinding binding{object, std::string(attribute)};
  if (attribute.empty() || !attribute_index_.insert(binding).second) return;
  attributes_.push_back(std::move(binding));
}

void SceneGraph::AddRelation(ObjectId subject, std::string_view relation,
                             ObjectId object) {
  if (subject == object || relation.empty()) return;
  RelationEdge edge{subject, std::string(relation), object};
  if (!relation_index_.insert(edge).second) return;
  relations_.push_back(std::move(edge));
}

std::optional<ObjectId> SceneGraph::FindObject(std::string_view canonical) const {
  auto it = by_canonical_.find(canonical);
  if (it == by_canonical_.end()) return std::nullopt;
  return it->second;
}

// --- token helpers ---

std::string TokenLemma(const Token& token, const Lexicon& lexicon) {
  if (token.lemma && !token.lemma->empty()) return ToLower(*token.lemma);
  return lexicon.Lemmatize(token.form, token.upos);
}

bool IsNounToken(const Token& token) {
  return token.upos == "NOUN" || token.upos == "PROPN";
}

namespace {

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Renumbers the tokens that survive `keep`, remapping heads.
DependencyParse Compact(const DependencyParse& parse,
                        const std::vector<bool>& keep) {
  std::vector<int> new_index(parse.size() + 1, 0);
  int next = 0;
  for (int i = 1; i <= parse.size(); ++i) {
    if (keep[i]) new_index[i] = ++next;
  }
  DependencyParse out;
  out.sentence_id = parse.sentence_id;
  for (int i = 1; i <= parse.size(); ++i) {
    if (!keep[i]) continue;
    Token t = parse.token(i);
    t.index = new_index[i];
    t.head = t.head == 0 ? 0 : new_index[t.head];
    out.tokens.push_back(std::move(t));
  }
  return out;
}

struct QuantifierPhrase {
  std::vector<std::string_view> words;  // ends with "of"
};

const std::array<QuantifierPhrase, 6>& QuantifierPhrases() {
  static const std::array<QuantifierPhrase, 6> kPhrases = {{
      {{"a", "lot", "of"}},
      {{"lots", "of"}},
      {{"plenty", "of"}},
      {{"a", "couple", "of"}},
      {{"a", "number", "of"}},
      {{"a", "bunch", "of"}},
  }};
  return kPhrases;
}

// Removes one quantifier phrase starting at token `start` if it matches and
// the result is still a tree.
std::optional<DependencyParse> CollapseAt(const DependencyParse& parse,
                                          int start) {
  for (const QuantifierPhrase& phrase : QuantifierPhrases()) {
    const int len = static_cast<int>(phrase.words.size());
    if (start + len - 1 > parse.size()) continue;
    bool match = true;
    for (int k = 0; k < len && match; ++k) {
      match = ToLower(parse.token(start + k).form) == phrase.words[k];
    }
    if (!match) continue;

    const int last = start + len - 1;  // the "of" token
    const int content = parse.token(last).head;
    if (content <= last) continue;  // "of" must attach to a later nominal

    std::vector<bool> removed(parse.size() + 1, false);
    for (int i = start; i <= last; ++i) removed[i] = true;

    DependencyParse edited = parse;
    Token& noun = edited.token(content);
    if (removed[noun.head]) {
      // Take over the attachment of the outermost removed ancestor.
      int top = noun.head;
      while (edited.token(top).head != 0 && removed[edited.token(top).head]) {
        top = edited.token(top).head;
      }
      noun.head = edited.token(top).head;
      noun.deprel = edited.token(top).deprel;
    }
    for (Token& t : edited.tokens) {
      if (!removed[t.index] && t.index != content && t.head != 0 &&
          removed[t.head]) {
        t.head = content;
      }
    }
    std::vector<bool> keep(parse.size() + 1, true);
    for (int i = start; i <= last; ++i) keep[i] = false;
    DependencyParse compacted = Compact(edited, keep);
    if (ValidateTree(compacted)) continue;
    return compacted;
  }
  return std::nullopt;
}

bool IsThirdPersonPronoun(const Token& token) {
  if (token.upos != "PRON" && token.upos != "DET") return false;
  static const std::array<std::string_view, 7> kPronouns = {
      "it", "he", "she", "they", "him", "her", "them"};
  const std::string form = ToLower(token.form);
  return std::find(kPronouns.begin(), kPronouns.end(), form) != kPronouns.end();
}

// Relational nouns that form multiword prepositions with a following
// "of" phrase ("on top of", "in front of").
bool IsChainNounLemma(std::string_view lemma) {
  static const std::array<std::string_view, 10> kChainNouns = {
      "top", "front", "back", "side", "middle",
      "edge", "bottom", "center", "rest", "end"};
  return std::find(kChainNouns.begin(), kChainNouns.end(), lemma) !=
         kChainNouns.end();
}

// Rule application over one parse. Token indices are 1-based throughout.
class RuleEngine {
 public:
  RuleEngine(const DependencyParse& parse, const Lexicon& lexicon)
      : parse_(parse), lexicon_(lexicon), n_(parse.size()) {
    children_.resize(n_ + 1);
    lemmas_.resize(n_ + 1);
    for (const Token& t : parse_.tokens) {
      children_[t.head].push_back(t.index);
      lemmas_[t.index] = TokenLemma(t, lexicon_);
    }
    chain_target_.assign(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) chain_target_[i] = FindChainTarget(i);
    owner_.assign(n_ + 1, 0);
  }

  SceneGraph Run() {
    CreateObjects();
    for (int i = 1; i <= n_; ++i) {
      const Token& t = parse_.token(i);
      const std::string_view base = BaseRelation(t.deprel);
      if (base == "amod") ApplyModifier(t);                       // R1
      if (HasChild(i, "cop")) ApplyCopula(t);                     // R2
      if (t.upos == "VERB" && t.deprel != "cop") ApplyVerb(t);    // R3, R8
      if ((base == "nmod" || base == "obl") && t.deprel != "nmod:poss")
        ApplyPrepositional(t);                                    // R4
      if (t.deprel == "nmod:poss") ApplyPossessive(t);            // R5
      if (t.deprel == "compound") ApplyCompound(t);               // R6
      if (base == "nummod") ApplyNumeric(t);                      // R7
    }
    return std::move(graph_);
  }

 private:
  const Token& token(int i) const { return parse_.token(i); }

  bool IsNoun(int i) const { return i > 0 && IsNounToken(token(i)); }

  bool HasChild(int i, std::string_view deprel) const {
    for (int c : children_[i]) {
      if (token(c).deprel == deprel) return true;
    }
    return false;
  }

  std::vector<int> ChildrenWithBase(int i, std::string_view base) const {
    std::vector<int> out;
    for (int c : children_[i]) {
      if (BaseRelation(token(c).deprel) == base) out.push_back(c);
    }
    return out;
  }

  // Lemmas of the case markers of `i` with their fixed continuations, in
  // surface order ("next to" -> {next, to}).
  std::vector<std::string> CaseWords(int i) const {
    std::vector<int> words;
    for (int c : children_[i]) {
      if (token(c).deprel != "case") continue;
      if (token(c).upos == "PART") continue;  // possessive 's
      words.push_back(c);
      for (int f : children_[c]) {
        if (BaseRelation(token(f).deprel) == "fixed") words.push_back(f);
      }
    }
    std::sort(words.begin(), words.end());
    std::vector<std::string> out;
    for (int w : words) out.push_back(lemmas_[w]);
    return out;
  }

  // For a relational noun like "top" with an "of" dependent, the dependent.
  int FindChainTarget(int i) const {
    if (!IsNoun(i) || !IsChainNounLemma(lemmas_[i])) return 0;
    const std::string_view base = BaseRelation(token(i).deprel);
    if (base != "nmod" && base != "obl") return 0;
    if (CaseWords(i).empty()) return 0;
    for (int c : children_[i]) {
      if (BaseRelation(token(c).deprel) != "nmod" ||
          token(c).deprel == "nmod:poss" || !IsNoun(c)) {
        continue;
      }
      if (CaseWords(c) == std::vector<std::string>{"of"}) return c;
    }
    return 0;
  }

  // Token whose object node absorbs noun `i`: compound modifiers fold into
  // their head and chain nouns into their target.
  int Owner(int i) {
    if (owner_[i]) return owner_[i];
    int result = i;
    if (chain_target_[i]) {
      result = Owner(chain_target_[i]);
    } else if (token(i).deprel == "compound" && IsNoun(token(i).head)) {
      result = Owner(token(i).head);
    }
    owner_[i] = result;
    return result;
  }

  void CreateObjects() {
    for (int i = 1; i <= n_; ++i) {
      if (IsNoun(i) && Owner(i) == i) graph_.AddObject(lemmas_[i], {0, i});
    }
    for (int i = 1; i <= n_; ++i) {
      if (IsNoun(i) && Owner(i) != i) {
        graph_.AddSourceToken(ObjectOf(i), {0, i});
      }
    }
  }

  ObjectId ObjectOf(int noun) { return *graph_.FindObject(lemmas_[Owner(noun)]); }

  // The object a non-nominal predicate is about: its nominal subject, the
  // noun an adnominal clause modifies, or the subject inherited from the
  // clause it is coordinated with or embedded in.
  std::optional<ObjectId> AssociatedObject(int i, int depth = 0) {
    if (i == 0 || depth > n_) return std::nullopt;
    if (IsNoun(i)) return ObjectOf(i);
    for (int c : children_[i]) {
      const std::string_view base = BaseRelation(token(c).deprel);
      if (base == "nsubj" && IsNoun(c)) return ObjectOf(c);
    }
    const Token& t = token(i);
    const std::string_view base = BaseRelation(t.deprel);
    if ((base == "acl" || base == "amod") && IsNoun(t.head)) {
      return ObjectOf(t.head);
    }
    if (base == "conj" || base == "xcomp" || base == "advcl") {
      return AssociatedObject(t.head, depth + 1);
    }
    return std::nullopt;
  }

  // Attribute form of a modifier. Participles keep their inflected surface
  // ("standing", "chopped"); other words use their lemma.
  std::string AttributeForm(int i) const {
    const Token& t = token(i);
    if (t.upos == "VERB") {
      const std::string form = ToLower(t.form);
      if (EndsWith(form, "ing") || EndsWith(form, "ed")) {
        return lexicon_.Lemmatize(form, "ADJ");
      }
    }
    return lemmas_[i];
  }

  std::string JoinLabel(const std::vector<std::string>& words) const {
    std::string label;
    for (const std::string& w : words) {
      if (!label.empty()) label += '-';
      label += w;
    }
    return label;
  }

  // Relation label and object for a prepositional nominal, following chains.
  std::pair<std::string, int> PrepositionalTarget(int nominal) const {
    std::vector<std::string> words = CaseWords(nominal);
    int target = nominal;
    while (chain_target_[target]) {
      words.push_back(lemmas_[target]);
      target = chain_target_[target];
      for (std::string& w : CaseWords(target)) words.push_back(std::move(w));
    }
    return {JoinLabel(words), target};
  }

  // R1
  void ApplyModifier(const Token& t) {
    if (!IsNoun(t.head)) return;
    graph_.AddAttribute(ObjectOf(t.head), AttributeForm(t.index));
  }

  // R2
  void ApplyCopula(const Token& predicate) {
    std::optional<ObjectId> subject;
    for (int c : children_[predicate.index]) {
      if (BaseRelation(token(c).deprel) == "nsubj" && IsNoun(c)) {
        subject = ObjectOf(c);
        break;
      }
    }
    if (!subject) return;
    if (IsNoun(predicate.index)) {
      auto [label, target] = PrepositionalTarget(predicate.index);
      graph_.AddRelation(*subject, label.empty() ? "be" : label,
                         ObjectOf(target));
    } else if (predicate.upos == "ADJ") {
      graph_.AddAttribute(*subject, lemmas_[predicate.index]);
    }
  }

  // R3 and R8
  void ApplyVerb(const Token& verb) {
    if (HasChild(verb.index, "cop")) return;
    std::vector<int> objects = ChildrenWithBase(verb.index, "obj");
    for (int c : ChildrenWithBase(verb.index, "dobj")) objects.push_back(c);
    auto subject = AssociatedObject(verb.index);
    if (!subject) return;
    if (objects.empty()) {
      graph_.AddAttribute(*subject, AttributeForm(verb.index));
      return;
    }
    for (int o : objects) {
      if (IsNoun(o)) graph_.AddRelation(*subject, lemmas_[verb.index], ObjectOf(o));
    }
  }

  // R4
  void ApplyPrepositional(const Token& nominal) {
    if (!IsNoun(nominal.index)) return;
    // The "of" dependent of a chain noun is consumed by the chain.
    if (chain_target_[nominal.head] == nominal.index) return;
    auto [label, target] = PrepositionalTarget(nominal.index);
    if (label.empty()) return;
    auto subject = AssociatedObject(nominal.head);
    if (!subject) return;
    graph_.AddRelation(*subject, label, ObjectOf(target));
  }

  // R5
  void ApplyPossessive(const Token& possessor) {
    if (!IsNoun(possessor.index) || !IsNoun(possessor.head)) return;
    graph_.AddRelation(ObjectOf(possessor.index), "have", ObjectOf(possessor.head));
  }

  // R6
  void ApplyCompound(const Token& modifier) {
    if (!IsNoun(modifier.head)) return;
    graph_.AddAttribute(ObjectOf(modifier.head), lemmas_[modifier.index]);
  }

  // R7
  void ApplyNumeric(const Token& number) {
    if (!IsNoun(number.head)) return;
    graph_.AddAttribute(ObjectOf(number.head), lemmas_[number.index]);
  }

  const DependencyParse& parse_;
  const Lexicon& lexicon_;
  const int n_;
  std::vector<std::vector<int>> children_;
  std::vector<std::string> lemmas_;
  std::vector<int> chain_target_;
  std::vector<int> owner_;
  SceneGraph graph_;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root wins, so every set is represented by its first member.
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

bool AliasesCompatible(const ObjectNode& a, const ObjectNode& b,
                       const Lexicon& lexicon) {
  for (const std::string& x : a.aliases) {
    for (const std::string& y : b.aliases) {
      if (lexicon.SameSynset(x, y)) return true;
    }
  }
  return false;
}

}  // namespace

DependencyParse SimplifyQuantifiers(const DependencyParse& parse) {
  DependencyParse current = parse;
  int start = 1;
  while (start <= current.size()) {
    if (auto collapsed = CollapseAt(current, start)) {
      current = std::move(*collapsed);
      continue;  // rescan from the same position
    }
    ++start;
  }
  return current;
}

DependencyParse ResolvePronouns(const DependencyParse& parse,
                                const Lexicon& lexicon) {
  DependencyParse out = parse;
  std::optional<std::string> antecedent;
  for (Token& t : out.tokens) {
    if (IsNounToken(t)) {
      antecedent = TokenLemma(t, lexicon);
    } else if (antecedent && IsThirdPersonPronoun(t)) {
      t.lemma = *antecedent;
      t.upos = "NOUN";
    }
  }
  return out;
}

SceneGraph BuildSceneGraph(const DependencyParse& parse, const Lexicon& lexicon) {
  if (auto error = ValidateTree(parse)) throw *error;
  return RuleEngine(parse, lexicon).Run();
}

SceneGraph ParseCaption(const DependencyParse& parse, const Lexicon& lexicon) {
  if (auto error = ValidateTree(parse)) throw *error;
  return BuildSceneGraph(ResolvePronouns(SimplifyQuantifiers(parse), lexicon),
                         lexicon);
}

SceneGraph MergeReferenceGraphs(std::span<const SceneGraph> graphs,
                                const Lexicon& lexicon) {
  struct Member {
    int graph;
    int first_token;
    const ObjectNode* node;
  };
  std::vector<Member> members;
  for (int g = 0; g < static_cast<int>(graphs.size()); ++g) {
    for (const ObjectNode& node : graphs[g].objects()) {
      int first = node.source_tokens.empty()
                      ? 0
                      : node.source_tokens.begin()->index;
      members.push_back({g, first, &node});
    }
  }
  std::stable_sort(members.begin(), members.end(),
                   [](const Member& a, const Member& b) {
                     if (a.graph != b.graph) return a.graph < b.graph;
                     return a.first_token < b.first_token;
                   });

  const int count = static_cast<int>(members.size());
  DisjointSets sets(count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (AliasesCompatible(*members[i].node, *members[j].node, lexicon)) {
        sets.Union(i, j);
      }
    }
  }

  // Roots are the earliest members, so visiting in order creates merged
  // nodes in canonical order.
  std::vector<std::set<std::string>> aliases(count);
  std::vector<std::set<TokenRef>> sources(count);
  for (int i = 0; i < count; ++i) {
    int root = sets.Find(i);
    const ObjectNode& node = *members[i].node;
    aliases[root].insert(node.aliases.begin(), node.aliases.end());
    for (TokenRef ref : node.source_tokens) {
      sources[root].insert({members[i].graph, ref.index});
    }
  }
  SceneGraph merged;
  std::vector<ObjectId> merged_id(count);
  for (int i = 0; i < count; ++i) {
    if (sets.Find(i) != i) continue;
    merged_id[i] = merged.AddMergedObject(members[i].node->canonical,
                                          std::move(aliases[i]),
                                          std::move(sources[i]));
  }

  // Map (graph, local id) to the merged node.
  std::vector<std::vector<ObjectId>> remap(graphs.size());
  for (size_t g = 0; g < graphs.size(); ++g)
    remap[g].resize(graphs[g].objects().size());
  for (int i = 0; i < count; ++i) {
    remap[members[i].graph][ToIndex(members[i].node->id)] =
        merged_id[sets.Find(i)];
  }
  for (size_t g = 0; g < graphs.size(); ++g) {
    for (const AttributeBinding& a : graphs[g].attributes()) {
      merged.AddAttribute(remap[g][ToIndex(a.object)], a.attribute);
    }
    for (const RelationEdge& r : graphs[g].relations()) {
      merged.AddRelation(remap[g][ToIndex(r.subject)], r.relation,
                         remap[g][ToIndex(r.object)]);
    }
  }
  return merged;
}

}  // namespace propeval
