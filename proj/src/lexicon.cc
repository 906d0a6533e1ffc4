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

#include "propeval/lexicon.h"

#include <algorithm>
#include <fstream>

namespace propeval {
namespace {

std::string_view StripLine(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t at = s.find(sep, start);
    parts.emplace_back(s.substr(start, at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

// Calls fn(line_number, line) for each non-blank, non-comment line.
template <typename Fn>
void ForEachDataLine(const std::filesystem::path& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file '" + path.string() + "'");
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = StripLine(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line_number, line);
  }
}

std::string Where(const std::filesystem::path& path, int line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

const std::vector<int>& NoSynsets() {
  static const std::vector<int> kEmpty;
  return kEmpty;
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view PosClass(std::string_view upos) {
  if (upos == "NOUN" || upos == "PROPN") return "NOUN";
  if (upos == "VERB" || upos == "AUX") return "VERB";
  if (upos == "ADJ") return "ADJ";
  return "";
}

// --- SynonymLexicon ---

void SynonymLexicon::AddSynset(const std::string& id,
                               const std::vector<std::string>& lemmas) {
  if (!seen_ids_.insert(id).second) {
    throw LexiconError("duplicate synset id '" + id + "'");
  }
  const int synset = static_cast<int>(synsets_.size());
  std::vector<std::string> members;
  for (const std::string& lemma : lemmas) {
    std::string lower = ToLower(lemma);
    if (lower.empty()) continue;
    if (std::find(members.begin(), members.end(), lower) != members.end())
      continue;
    members.push_back(lower);
    index_[lower].push_back(synset);
  }
  ids_.push_back(id);
  synsets_.push_back(std::move(members));
}

const std::vector<int>& SynonymLexicon::SynsetsOf(std::string_view lemma) const {
  auto it = index_.find(std::string(lemma));
  return it == index_.end() ? NoSynsets() : it->second;
}

bool SynonymLexicon::SameSynset(std::string_view a, std::string_view b) const {
  if (a == b) return true;
  const std::vector<int>& sa = SynsetsOf(a);
  if (sa.empty()) return false;
  const std::vector<int>& sb = SynsetsOf(b);
  // Synset lists are appended in increasing id order, so both are sorted.
  auto i = sa.begin();
  auto j = sb.begin();
  while (i != sa.end() && j != sb.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::vector<std::string> SynonymLexicon::Lemmas() const {
  std::vector<std::string> lemmas;
  lemmas.reserve(index_.size());
  for (const auto& [lemma, unused] : index_) lemmas.push_back(lemma);
  std::sort(lemmas.begin(), lemmas.end());
  return lemmas;
}

SynonymLexicon SynonymLexicon::ReadFile(const std::filesystem::path& path) {
  SynonymLexicon lexicon;
  ForEachDataLine(path, [&](int line_number, std::string_view line) {
    auto fields = Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw LexiconError(Where(path, line_number) +
                         "expected 'synset-id<TAB>lemma,lemma,...'");
    }
    try {
      lexicon.AddSynset(fields[0], Split(fields[1], ','));
    } catch (const LexiconError& e) {
      throw LexiconError(Where(path, line_number) + e.what());
    }
  });
  return lexicon;
}

// --- LemmaRules ---

void LemmaRules::AddException(std::string pos, std::string surface,
                              std::string lemma) {
  exceptions_[std::move(pos)][ToLower(surface)] = ToLower(lemma);
}

void LemmaRules::AddSuffixRule(std::string pos, std::string suffix,
                               std::string replacement) {
  rules_.push_back({std::move(pos), ToLower(suffix), ToLower(replacement)});
}

std::string LemmaRules::Lemmatize(std::string_view surface,
                                  std::string_view upos) const {
  std::string word = ToLower(surface);
  std::string_view pos = PosClass(upos);
  if (pos.empty()) return word;

  if (auto table = exceptions_.find(pos); table != exceptions_.end()) {
    if (auto hit = table->second.find(word); hit != table->second.end()) {
      return hit->second;
    }
  }

  const SuffixRule* best = nullptr;
  for (const SuffixRule& rule : rules_) {
    if (rule.pos != pos) continue;
    if (!EndsWith(word, rule.suffix)) continue;
    if (word.size() - rule.suffix.size() < kMinStem) continue;
    if (!best || rule.suffix.size() > best->suffix.size()) best = &rule;
  }
  if (!best) return word;
  word.resize(word.size() - best->suffix.size());
  word += best->replacement;
  return word;
}

std::vector<std::string> LemmaRules::ExceptionSurfaces(
    std::string_view pos) const {
  std::vector<std::string> surfaces;
  if (auto table = exceptions_.find(pos); table != exceptions_.end()) {
    for (const auto& [surface, unused] : table->second)
      surfaces.push_back(surface);
  }
  std::sort(surfaces.begin(), surfaces.end());
  return surfaces;
}

LemmaRules LemmaRules::ReadFiles(const std::filesystem::path& exceptions,
                                 const std::filesystem::path& suffixes) {
  LemmaRules rules;
  ForEachDataLine(exceptions, [&](int line_number, std::string_view line) {
    auto fields = Split(line, '\t');
    if (fields.size() != 3 || fields[1].empty() || fields[2].empty()) {
      throw LexiconError(Where(exceptions, line_number) +
                         "expected 'pos<TAB>surface<TAB>lemma'");
    }
    rules.AddException(fields[0], fields[1], fields[2]);
  });
  ForEachDataLine(suffixes, [&](int line_number, std::string_view line) {
    auto fields = Split(line, '\t');
    if (fields.size() == 2) fields.emplace_back();  // empty replacement
    if (fields.size() != 3 || fields[1].empty()) {
      throw LexiconError(Where(suffixes, line_number) +
                         "expected 'pos<TAB>suffix<TAB>replacement'");
    }
    rules.AddSuffixRule(fields[0], fields[1], fields[2]);
  });
  return rules;
}

// --- CategoryLists ---

std::string_view AttributeCategoryName(AttributeCategory category) {
  switch (category) {
    case AttributeCategory::kColor: return "color";
    case AttributeCategory::kCount: return "count";
    case AttributeCategory::kSize: return "size";
    case AttributeCategory::kOther: return "other";
  }
  return "other";
}

CategoryLists::CategoryLists(std::set<std::string> colors,
                             std::set<std::string> counts,
                             std::set<std::string> sizes)
    : colors_(std::move(colors)),
      counts_(std::move(counts)),
      sizes_(std::move(sizes)) {
  auto check = [](const std::set<std::string>& a, std::string_view a_name,
                  const std::set<std::string>& b, std::string_view b_name) {
    for (const std::string& word : a) {
      if (b.count(word)) {
        throw LexiconError("'" + word + "' is in both the " +
                           std::string(a_name) + " and " +
                           std::string(b_name) + " lists");
      }
    }
  };
  check(colors_, "color", counts_, "count");
  check(colors_, "color", sizes_, "size");
  check(counts_, "count", sizes_, "size");
}

AttributeCategory CategoryLists::Categorize(std::string_view lemma) const {
  const std::string key(lemma);
  if (colors_.count(key)) return AttributeCategory::kColor;
  if (counts_.count(key)) return AttributeCategory::kCount;
  if (sizes_.count(key)) return AttributeCategory::kSize;
  return AttributeCategory::kOther;
}

std::set<std::string> ReadWordList(const std::filesystem::path& path) {
  std::set<std::string> words;
  ForEachDataLine(path, [&](int, std::string_view line) {
    words.insert(ToLower(line));
  });
  return words;
}

// --- Lexicon ---

LexiconPaths LexiconPaths::InDirectory(const std::filesystem::path& dir) {
  return {dir / "synsets.tsv", dir / "lemma_exceptions.tsv",
          dir / "suffix_rules.tsv", dir / "colors.txt",
          dir / "counts.txt", dir / "sizes.txt"};
}

Lexicon Lexicon::Load(const LexiconPaths& paths) {
  return Lexicon(SynonymLexicon::ReadFile(paths.synsets),
                 LemmaRules::ReadFiles(paths.lemma_exceptions, paths.suffix_rules),
                 CategoryLists(ReadWordList(paths.colors),
                               ReadWordList(paths.counts),
                               ReadWordList(paths.sizes)));
}

std::filesystem::path Lexicon::DefaultDirectory() {
  return PROPEVAL_DEFAULT_LEXICON_DIR;
}

Lexicon Lexicon::LoadDefault() {
  return Load(LexiconPaths::InDirectory(DefaultDirectory()));
}

}  // namespace propeval
