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

#include <gtest/gtest.h>

#include "test_util.h"

namespace propeval {
namespace {

using ::propeval::testing::MakeParse;

constexpr char kDogsRun[] =
    "# sent_id = s1\n"
    "1\tdogs\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
    "2\trun\trun\tVERB\t_\t_\t0\troot\t_\t_\n";

TEST(ParseConllu, MinimalSentence) {
  auto parses = ParseConllu(kDogsRun);
  ASSERT_EQ(parses.size(), 1u);
  const DependencyParse& p = parses[0];
  EXPECT_EQ(p.sentence_id, "s1");
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.token(1).form, "dogs");
  EXPECT_FALSE(p.token(1).lemma.has_value());
  EXPECT_EQ(p.token(2).lemma, "run");
  EXPECT_EQ(p.token(1).head, 2);
  EXPECT_EQ(p.token(2).head, 0);
  EXPECT_EQ(p.token(2).deprel, "root");
}

TEST(ParseConllu, EmptyInput) {
  EXPECT_TRUE(ParseConllu("").empty());
  EXPECT_TRUE(ParseConllu("\n\n# just a comment\n\n").empty());
}

TEST(ParseConllu, NineColumnsReportsLine) {
  const std::string text =
      "# sent_id = s1\n"
      "1\tdogs\t_\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\trun\t_\tVERB\t_\t_\t0\troot\t_\n";
  try {
    ParseConllu(text);
    FAIL() << "expected ConlluError";
  } catch (const ConlluError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ParseConllu, SentencesWithoutIdsAreNumbered) {
  const std::string text =
      "1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
      "1\tb\t_\tNOUN\t_\t_\t0\troot\t_\t_\n";
  auto parses = ParseConllu(text);
  ASSERT_EQ(parses.size(), 2u);
  EXPECT_EQ(parses[0].sentence_id, "1");
  EXPECT_EQ(parses[1].sentence_id, "2");
}

TEST(ParseConllu, SkipsRangesAndEmptyNodes) {
  const std::string text =
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\t_\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\t_\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "2.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "3\tgo\t_\tVERB\t_\t_\t0\troot\t_\t_\n";
  auto parses = ParseConllu(text);
  ASSERT_EQ(parses.size(), 1u);
  EXPECT_EQ(parses[0].size(), 3);
}

TEST(ParseConllu, CrlfLineEndings) {
  const std::string text = "1\tdog\t_\tNOUN\t_\t_\t0\troot\t_\t_\r\n";
  auto parses = ParseConllu(text);
  ASSERT_EQ(parses.size(), 1u);
  EXPECT_EQ(parses[0].token(1).deprel, "root");
}

TEST(ParseConllu, OutOfSequenceId) {
  const std::string text =
      "1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "3\tb\t_\tNOUN\t_\t_\t1\tdep\t_\t_\n";
  EXPECT_THROW(ParseConllu(text), ConlluError);
}

TEST(ParseConllu, NonNumericHead) {
  EXPECT_THROW(ParseConllu("1\ta\t_\tNOUN\t_\t_\tx\troot\t_\t_\n"), ConlluError);
}

TEST(ParseConllu, StructuralErrorNamesSentence) {
  const std::string text =
      "# sent_id = bad\n"
      "1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "2\tb\t_\tNOUN\t_\t_\t0\troot\t_\t_\n";
  try {
    ParseConllu(text);
    FAIL() << "expected StructureError";
  } catch (const StructureError& e) {
    EXPECT_EQ(e.kind(), StructureError::Kind::kMultipleRoots);
    EXPECT_EQ(e.sentence_id(), "bad");
    EXPECT_EQ(e.tokens(), (std::vector<int>{1, 2}));
  }
}

TEST(ValidateTree, Chain) {
  auto p = MakeParse("s", {"a X 2 dep", "b X 0 root"});
  EXPECT_FALSE(ValidateTree(p).has_value());
}

TEST(ValidateTree, TwoCycle) {
  auto p = MakeParse("s", {"a X 2 dep", "b X 1 dep", "c X 0 root"});
  auto error = ValidateTree(p);
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind(), StructureError::Kind::kCycle);
  EXPECT_EQ(error->tokens(), (std::vector<int>{1, 2}));
}

TEST(ValidateTree, CycleWithoutRoot) {
  auto p = MakeParse("s", {"a X 2 dep", "b X 1 dep"});
  auto error = ValidateTree(p);
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind(), StructureError::Kind::kCycle);
}

TEST(ValidateTree, MultipleRoots) {
  auto p = MakeParse("s", {"a X 0 root", "b X 0 root"});
  auto error = ValidateTree(p);
  ASSERT_TRUE(error.has_value());
  EXPECT_EQ(error->kind(), StructureError::Kind::kMultipleRoots);
}

TEST(ValidateTree, SelfAndOutOfRangeHeads) {
  auto self = MakeParse("s", {"a X 1 dep"});
  ASSERT_TRUE(ValidateTree(self).has_value());
  EXPECT_EQ(ValidateTree(self)->kind(), StructureError::Kind::kBadHead);
  auto far = MakeParse("s", {"a X 0 root", "b X 7 dep"});
  EXPECT_EQ(ValidateTree(far)->kind(), StructureError::Kind::kBadHead);
}

TEST(ValidateTree, EmptyParseHasNoRoot) {
  DependencyParse empty;
  EXPECT_EQ(ValidateTree(empty)->kind(), StructureError::Kind::kNoRoot);
}

TEST(WriteConllu, RoundTrip) {
  auto parses = ParseConllu(kDogsRun);
  EXPECT_EQ(ParseConllu(WriteConllu(parses)), parses);
}

TEST(ReadConlluFile, Fixture) {
  auto parses = ReadConlluFile(testing::FixturePath("captions.conllu"));
  EXPECT_GE(parses.size(), 10u);
  EXPECT_EQ(parses[0].sentence_id, "girl_court");
  EXPECT_THROW(ReadConlluFile(testing::FixturePath("no_such.conllu")),
               std::runtime_error);
}

}  // namespace
}  // namespace propeval
