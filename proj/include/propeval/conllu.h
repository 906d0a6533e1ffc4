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

// Reading and writing Universal Dependencies parses in CoNLL-U format.
//
// Only the basic tree is kept: ID, FORM, LEMMA, UPOS, HEAD and DEPREL.
// Multiword token ranges (1-2) and empty nodes (1.1) are skipped, and the
// enhanced DEPS column is ignored.

#ifndef PROPEVAL_CONLLU_H_
#define PROPEVAL_CONLLU_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace propeval {

struct Token {
  int index = 0;                      // 1-based position in the sentence
  std::string form;
  std::optional<std::string> lemma;   // nullopt when the column is "_"
  std::string upos;
  int head = 0;                       // 0 is the artificial root
  std::string deprel;

  bool operator==(const Token&) const = default;
};

struct DependencyParse {
  std::string sentence_id;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }

  // Tokens are stored in index order, so token i lives at tokens[i - 1].
  const Token& token(int index) const { return tokens.at(index - 1); }
  Token& token(int index) { return tokens.at(index - 1); }

  bool operator==(const DependencyParse&) const = default;
};

// Malformed CoNLL-U text. line() is the 1-based input line.
class ConlluError : public std::runtime_error {
 public:
  ConlluError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A parse whose head structure is not a single-rooted tree.
class StructureError : public std::runtime_error {
 public:
  enum class Kind { kNoRoot, kMultipleRoots, kCycle, kBadHead, kBadIndex };

  StructureError(Kind kind, std::string sentence_id, std::vector<int> tokens,
                 const std::string& what)
      : std::runtime_error("sentence '" + sentence_id + "': " + what),
        kind_(kind),
        sentence_id_(std::move(sentence_id)),
        tokens_(std::move(tokens)) {}

  Kind kind() const { return kind_; }
  const std::string& sentence_id() const { return sentence_id_; }
  // Offending token indices: the roots, or the members of the cycle.
  const std::vector<int>& tokens() const { return tokens_; }

 private:
  Kind kind_;
  std::string sentence_id_;
  std::vector<int> tokens_;
};

// Returns the first structural violation in `parse`, if any.
std::optional<StructureError> ValidateTree(const DependencyParse& parse);

// Parses every sentence block in `text`. Throws ConlluError on a format
// violation and StructureError when a sentence is not a tree. Sentences
// without a "# sent_id =" comment are named by their 1-based position.
std::vector<DependencyParse> ParseConllu(std::string_view text);

// Reads and parses a CoNLL-U file. Throws std::runtime_error if unreadable.
std::vector<DependencyParse> ReadConlluFile(const std::string& path);

// Serializes parses back to CoNLL-U. Columns that are not stored are "_".
std::string WriteConllu(const std::vector<DependencyParse>& parses);

}  // namespace propeval

#endif  // PROPEVAL_CONLLU_H_
