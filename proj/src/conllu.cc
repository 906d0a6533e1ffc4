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

#include "propeval/conllu.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace propeval {
namespace {

constexpr int kNumColumns = 10;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Returns the value of a "# sent_id = X" comment, if `line` is one.
std::optional<std::string> SentIdComment(std::string_view line) {
  line.remove_prefix(1);  // '#'
  line = Trim(line);
  constexpr std::string_view kKey = "sent_id";
  if (line.substr(0, kKey.size()) != kKey) return std::nullopt;
  line.remove_prefix(kKey.size());
  line = Trim(line);
  if (line.empty() || line.front() != '=') return std::nullopt;
  line.remove_prefix(1);
  return std::string(Trim(line));
}

std::string JoinInts(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::optional<StructureError> ValidateTree(const DependencyParse& parse) {
  using Kind = StructureError::Kind;
  const int n = parse.size();
  for (int i = 1; i <= n; ++i) {
    const Token& t = parse.tokens[i - 1];
    if (t.index != i) {
      return StructureError(Kind::kBadIndex, parse.sentence_id, {t.index},
                            "token at position " + std::to_string(i) +
                                " has index " + std::to_string(t.index));
    }
    if (t.head < 0 || t.head > n || t.head == t.index) {
      return StructureError(Kind::kBadHead, parse.sentence_id, {t.index},
                            "token " + std::to_string(t.index) +
                                " has invalid head " + std::to_string(t.head));
    }
  }

  // 0 = unvisited, 1 = on the current walk, 2 = reaches the root.
  std::vector<int> state(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (state[start] == 2) continue;
    std::vector<int> path;
    int node = start;
    while (node != 0 && state[node] == 0) {
      state[node] = 1;
      path.push_back(node);
      node = parse.tokens[node - 1].head;
    }
    if (node != 0 && state[node] == 1) {
      std::vector<int> cycle;
      bool in_cycle = false;
      for (int p : path) {
        if (p == node) in_cycle = true;
        if (in_cycle) cycle.push_back(p);
      }
      return StructureError(Kind::kCycle, parse.sentence_id, cycle,
                            "head cycle through tokens " + JoinInts(cycle));
    }
    for (int p : path) state[p] = 2;
  }

  std::vector<int> roots;
  for (const Token& t : parse.tokens) {
    if (t.head == 0) roots.push_back(t.index);
  }
  if (roots.empty()) {
    return StructureError(Kind::kNoRoot, parse.sentence_id, {},
                          "no token attaches to the root");
  }
  if (roots.size() > 1) {
    return StructureError(Kind::kMultipleRoots, parse.sentence_id, roots,
                          "multiple roots: tokens " + JoinInts(roots));
  }
  return std::nullopt;
}

std::vector<DependencyParse> ParseConllu(std::string_view text) {
  std::vector<DependencyParse> parses;
  DependencyParse current;
  std::optional<std::string> sent_id;
  int line_number = 0;
  int sentence_count = 0;

  auto finish = [&]() {
    if (current.tokens.empty()) {
      sent_id.reset();
      return;
    }
    ++sentence_count;
    current.sentence_id =
        sent_id ? *sent_id : std::to_string(sentence_count);
    if (auto error = ValidateTree(current)) throw *error;
    parses.push_back(std::move(current));
    current = DependencyParse();
    sent_id.reset();
  };

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (Trim(line).empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') {
      if (auto id = SentIdComment(line)) sent_id = std::move(id);
      continue;
    }

    auto fields = SplitTabs(line);
    if (static_cast<int>(fields.size()) != kNumColumns) {
      throw ConlluError(line_number,
                        "expected 10 tab-separated columns, found " +
                            std::to_string(fields.size()));
    }
    std::string_view id = fields[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos) {
      continue;  // multiword token range or empty node
    }
    auto index = ParseInt(id);
    if (!index) throw ConlluError(line_number, "bad token id '" + std::string(id) + "'");
    if (*index != current.size() + 1) {
      throw ConlluError(line_number, "token id " + std::to_string(*index) +
                                         " out of sequence");
    }
    auto head = ParseInt(fields[6]);
    if (!head) {
      throw ConlluError(line_number,
                        "bad head '" + std::string(fields[6]) + "'");
    }
    Token token;
    token.index = *index;
    token.form = std::string(fields[1]);
    if (fields[2] != "_") token.lemma = std::string(fields[2]);
    token.upos = std::string(fields[3]);
    token.head = *head;
    token.deprel = std::string(fields[7]);
    current.tokens.push_back(std::move(token));
  }
  finish();
  return parses;
}

std::vector<DependencyParse> ReadConlluFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open CoNLL-U file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConllu(buffer.str());
}

std::string WriteConllu(const std::vector<DependencyParse>& parses) {
  std::string out;
  for (const DependencyParse& parse : parses) {
    out += "# sent_id = " + parse.sentence_id + "\n";
    for (const Token& t : parse.tokens) {
      out += std::to_string(t.index);
      out += '\t' + t.form;
      out += '\t' + (t.lemma ? *t.lemma : std::string("_"));
      out += '\t' + t.upos;
      out += "\t_\t_\t";
      out += std::to_string(t.head);
      out += '\t' + t.deprel;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace propeval
