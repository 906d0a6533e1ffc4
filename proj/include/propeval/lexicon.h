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

// Word-level resources: lemmatization, synonym sets and the attribute
// category word lists. Everything is loaded from flat files and immutable
// afterwards, so a Lexicon can be shared freely across threads.
//
// File formats (one entry per line, '#' starts a comment line):
//   synsets.tsv          synset-id <TAB> lemma,lemma,...
//   lemma_exceptions.tsv pos <TAB> surface <TAB> lemma
//   suffix_rules.tsv     pos <TAB> suffix <TAB> replacement
//   colors.txt, counts.txt, sizes.txt   one lemma per line
// where pos is one of NOUN, VERB, ADJ.

#ifndef PROPEVAL_LEXICON_H_
#define PROPEVAL_LEXICON_H_

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace propeval {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ASCII lowercasing; other bytes pass through.
std::string ToLower(std::string_view s);

// Lemmatizer word class for a UD part-of-speech tag. NOUN/PROPN map to
// "NOUN", VERB/AUX to "VERB", ADJ to "ADJ"; everything else to "".
std::string_view PosClass(std::string_view upos);

class SynonymLexicon {
 public:
  // Lemmas are lowercased. Throws LexiconError on a duplicate synset id.
  void AddSynset(const std::string& id, const std::vector<std::string>& lemmas);

  // True iff a == b or a and b share a synset.
  bool SameSynset(std::string_view a, std::string_view b) const;

  // Synset ids containing `lemma`, in insertion order. Empty if unknown.
  const std::vector<int>& SynsetsOf(std::string_view lemma) const;

  int num_synsets() const { return static_cast<int>(synsets_.size()); }
  const std::string& synset_id(int synset) const { return ids_.at(synset); }
  const std::vector<std::string>& synset(int synset) const {
    return synsets_.at(synset);
  }
  // All lemmas in the index, sorted.
  std::vector<std::string> Lemmas() const;

  static SynonymLexicon ReadFile(const std::filesystem::path& path);

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::string>> synsets_;
  std::unordered_map<std::string, std::vector<int>> index_;
  std::unordered_set<std::string> seen_ids_;
};

class LemmaRules {
 public:
  struct SuffixRule {
    std::string pos;
    std::string suffix;
    std::string replacement;
  };

  void AddException(std::string pos, std::string surface, std::string lemma);
  void AddSuffixRule(std::string pos, std::string suffix,
                     std::string replacement);

  // Exceptions first, then the longest matching suffix rule for the word
  // class, else the lowercased surface. A rule only fires when at least
  // kMinStem characters remain in front of the suffix.
  std::string Lemmatize(std::string_view surface, std::string_view upos) const;

  // Exception surfaces for a word class, sorted.
  std::vector<std::string> ExceptionSurfaces(std::string_view pos) const;
  const std::vector<SuffixRule>& suffix_rules() const { return rules_; }

  static LemmaRules ReadFiles(const std::filesystem::path& exceptions,
                              const std::filesystem::path& suffixes);

  static constexpr size_t kMinStem = 2;

 private:
  std::map<std::string, std::unordered_map<std::string, std::string>, std::less<>>
      exceptions_;
  std::vector<SuffixRule> rules_;
};

enum class AttributeCategory { kColor, kCount, kSize, kOther };

std::string_view AttributeCategoryName(AttributeCategory category);

class CategoryLists {
 public:
  CategoryLists() = default;
  // Throws LexiconError if the lists overlap.
  CategoryLists(std::set<std::string> colors, std::set<std::string> counts,
                std::set<std::string> sizes);

  AttributeCategory Categorize(std::string_view lemma) const;

  const std::set<std::string>& colors() const { return colors_; }
  const std::set<std::string>& counts() const { return counts_; }
  const std::set<std::string>& sizes() const { return sizes_; }

 private:
  std::set<std::string> colors_;
  std::set<std::string> counts_;
  std::set<std::string> sizes_;
};

// Reads a one-lemma-per-line word list, lowercased.
std::set<std::string> ReadWordList(const std::filesystem::path& path);

struct LexiconPaths {
  std::filesystem::path synsets;
  std::filesystem::path lemma_exceptions;
  std::filesystem::path suffix_rules;
  std::filesystem::path colors;
  std::filesystem::path counts;
  std::filesystem::path sizes;

  // Standard file names inside `dir`.
  static LexiconPaths InDirectory(const std::filesystem::path& dir);
};

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(SynonymLexicon synonyms, LemmaRules lemmas, CategoryLists categories)
      : synonyms_(std::move(synonyms)),
        lemmas_(std::move(lemmas)),
        categories_(std::move(categories)) {}

  static Lexicon Load(const LexiconPaths& paths);
  // The data files shipped with the project.
  static Lexicon LoadDefault();
  static std::filesystem::path DefaultDirectory();

  std::string Lemmatize(std::string_view surface, std::string_view upos) const {
    return lemmas_.Lemmatize(surface, upos);
  }
  bool SameSynset(std::string_view a, std::string_view b) const {
    return synonyms_.SameSynset(a, b);
  }
  AttributeCategory Categorize(std::string_view lemma) const {
    return categories_.Categorize(lemma);
  }

  const SynonymLexicon& synonyms() const { return synonyms_; }
  const LemmaRules& lemmas() const { return lemmas_; }
  const CategoryLists& categories() const { return categories_; }

 private:
  SynonymLexicon synonyms_;
  LemmaRules lemmas_;
  CategoryLists categories_;
};

}  // namespace propeval

#endif  // PROPEVAL_LEXICON_H_
