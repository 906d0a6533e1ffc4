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

#include "propeval/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_util.h"

namespace propeval {
namespace {

using ::propeval::testing::FixturePath;
using json = nlohmann::json;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "propeval");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun run;
  run.status = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::vector<std::string> Inputs(const std::string& judgments) {
  return {"--judgments", FixturePath(judgments), "--parses",
          FixturePath("captions.conllu")};
}

std::vector<std::string> Args(const std::string& command, const std::string& judgments,
                              std::vector<std::string> extra = {}) {
  std::vector<std::string> args{command};
  for (const std::string& a : Inputs(judgments)) args.push_back(a);
  for (const std::string& a : extra) args.push_back(a);
  return args;
}

std::vector<json> Lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(json::parse(line));
  return lines;
}

TEST(Score, IdentityFixture) {
  CliRun run = Cli(Args("score", "identity.jsonl"));
  EXPECT_EQ(run.status, kExitOk) << run.err;
  auto lines = Lines(run.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["id"], "r1");
  EXPECT_EQ(lines[0]["f"], 1.0);
  EXPECT_FALSE(lines[0].contains("graphs"));
  EXPECT_TRUE(run.err.empty());
}

TEST(Score, MissingParsesIsFatal) {
  CliRun run = Cli({"score", "--judgments", FixturePath("identity.jsonl"), "--parses",
                 FixturePath("absent.conllu")});
  EXPECT_EQ(run.status, kExitFatal);
  EXPECT_TRUE(run.out.empty());
  EXPECT_NE(run.err.find("absent.conllu"), std::string::npos) << run.err;
}

TEST(Score, ExactModeScoresSynonymsLower) {
  CliRun exact = Cli(Args("score", "synonym.jsonl", {"--mode", "exact"}));
  CliRun synonym = Cli(Args("score", "synonym.jsonl"));  // synonym is the default
  ASSERT_EQ(exact.status, kExitOk);
  ASSERT_EQ(synonym.status, kExitOk);
  EXPECT_LT(Lines(exact.out)[0]["f"].get<double>(),
            Lines(synonym.out)[0]["f"].get<double>());
}

TEST(Score, EmitGraphs) {
  CliRun run = Cli(Args("score", "identity.jsonl", {"--emit-graphs"}));
  ASSERT_EQ(run.status, kExitOk);
  json graphs = Lines(run.out)[0]["graphs"];
  EXPECT_EQ(graphs["candidate"]["objects"][0]["canonical"], "girl");
  EXPECT_EQ(graphs["candidate"]["relations"][0],
            json::array({"girl", "on-top-of", "court"}));
}

TEST(Score, PartialFailure) {
  CliRun run = Cli(Args("score", "partial.jsonl"));
  EXPECT_EQ(run.status, kExitPartial);
  auto lines = Lines(run.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["id"], "ok1");
  EXPECT_EQ(lines[1]["id"], "ok2");
  EXPECT_NE(run.err.find("dangling"), std::string::npos);
  EXPECT_NE(run.err.find("noref"), std::string::npos);
}

TEST(Score, ExcludeCandidateInReference) {
  CliRun run = Cli(Args("score", "graded.jsonl", {"--exclude-candidate-in-reference"}));
  ASSERT_EQ(run.status, kExitOk);
  EXPECT_EQ(Lines(run.out).size(), 3u);
}

TEST(Score, OutFileAndDeterminism) {
  const auto path = std::filesystem::temp_directory_path() / "propeval_cli_out.jsonl";
  CliRun first = Cli(Args("score", "systems.jsonl", {"--out", path.string()}));
  ASSERT_EQ(first.status, kExitOk);
  EXPECT_TRUE(first.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream file;
  file << in.rdbuf();
  CliRun second = Cli(Args("score", "systems.jsonl"));
  EXPECT_EQ(file.str(), second.out);
  std::filesystem::remove(path);
}

TEST(Score, LexiconOverrides) {
  // Moving "two"/"three" out of the count list empties the count category.
  const auto dir = std::filesystem::temp_directory_path() / "propeval_cli_lists";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "counts.txt") << "four\n";
  CliRun base = Cli(Args("score", "counts.jsonl"));
  CliRun custom = Cli(Args("score", "counts.jsonl",
                        {"--counts", (dir / "counts.txt").string()}));
  ASSERT_EQ(custom.status, kExitOk) << custom.err;
  EXPECT_EQ(Lines(base.out)[0]["categories"]["count"]["reference_total"], 1);
  EXPECT_EQ(Lines(custom.out)[0]["categories"]["count"]["reference_total"], 0);

  CliRun bad_dir = Cli(Args("score", "counts.jsonl", {"--lexicon-dir", dir.string()}));
  EXPECT_EQ(bad_dir.status, kExitFatal);
  std::filesystem::remove_all(dir);
}

TEST(Evaluate, CaptionAnalysis) {
  CliRun run = Cli(Args("evaluate", "graded.jsonl", {"--analysis", "caption"}));
  ASSERT_EQ(run.status, kExitOk) << run.err;
  json report = json::parse(run.out);
  EXPECT_NEAR(report["correlations"]["kendall_tau"].get<double>(), 4.0 / 6.0, 1e-12);
  EXPECT_EQ(report["mode"], "synonym");
}

TEST(Evaluate, SystemAnalysis) {
  CliRun run = Cli(Args("evaluate", "systems.jsonl", {"--analysis", "system", "--question", "M1"}));
  ASSERT_EQ(run.status, kExitOk) << run.err;
  json report = json::parse(run.out);
  EXPECT_EQ(report["per_system"].size(), 4u);
  EXPECT_TRUE(report["correlations"].contains("pearson"));
  EXPECT_TRUE(report["correlations"].contains("p_value"));

  // Two question ids and no --question: ambiguous.
  CliRun ambiguous = Cli(Args("evaluate", "systems.jsonl", {"--analysis", "system"}));
  EXPECT_EQ(ambiguous.status, kExitFatal);
}

TEST(Evaluate, TwoSystemsIsInsufficient) {
  CliRun run = Cli(Args("evaluate", "two_systems.jsonl", {"--analysis", "system"}));
  EXPECT_EQ(run.status, kExitFatal);
  EXPECT_NE(run.err.find("insufficient data"), std::string::npos) << run.err;
}

TEST(Evaluate, PreferenceAnalysis) {
  CliRun run = Cli(Args("evaluate", "pairs.jsonl", {"--analysis", "preference"}));
  ASSERT_EQ(run.status, kExitOk) << run.err;
  const double accuracy =
      json::parse(run.out)["correlations"]["pairwise_accuracy"].get<double>();
  EXPECT_GE(accuracy, 0.0);
  EXPECT_LE(accuracy, 1.0);
}

TEST(Evaluate, ShapeMismatchIsFatal) {
  CliRun caption_on_pairs = Cli(Args("evaluate", "pairs.jsonl", {"--analysis", "caption"}));
  EXPECT_EQ(caption_on_pairs.status, kExitFatal);
  EXPECT_FALSE(caption_on_pairs.err.empty());
  CliRun pairs_on_graded = Cli(Args("evaluate", "graded.jsonl", {"--analysis", "preference"}));
  EXPECT_EQ(pairs_on_graded.status, kExitFatal);
  // Evaluation loads strictly: one bad record is fatal.
  CliRun partial = Cli(Args("evaluate", "partial.jsonl", {"--analysis", "caption"}));
  EXPECT_EQ(partial.status, kExitFatal);
}

TEST(Breakdown, IdentityAllOnes) {
  CliRun run = Cli(Args("breakdown", "identity.jsonl"));
  ASSERT_EQ(run.status, kExitOk) << run.err;
  json row = json::parse(run.out)["breakdown"][0];
  EXPECT_EQ(row["system"], "sysA");
  for (const char* c : {"object", "relation", "attribute", "color", "count", "size"}) {
    EXPECT_EQ(row["categories"][c]["f"], 1.0) << c;
  }
}

TEST(Breakdown, CountErrors) {
  CliRun run = Cli(Args("breakdown", "counts.jsonl"));
  ASSERT_EQ(run.status, kExitOk);
  json row = json::parse(run.out)["breakdown"][0];
  EXPECT_EQ(row["categories"]["count"]["f"], 0.0);
  EXPECT_EQ(row["categories"]["object"]["f"], 1.0);
}

TEST(Breakdown, MultiSystemTextTable) {
  CliRun json_run = Cli(Args("breakdown", "systems.jsonl"));
  json rows = json::parse(json_run.out)["breakdown"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2]["system"], "sysC");

  CliRun text = Cli(Args("breakdown", "systems.jsonl", {"--format", "text"}));
  ASSERT_EQ(text.status, kExitOk);
  std::istringstream in(text.out);
  std::string header, line;
  std::getline(in, header);
  EXPECT_NE(header.find("count"), std::string::npos);
  int rows_seen = 0;
  while (std::getline(in, line)) {
    if (line.rfind("sys", 0) == 0) ++rows_seen;
  }
  EXPECT_EQ(rows_seen, 4);
  // sysD has no colour tuples on either side.
  EXPECT_NE(text.out.find("sysD"), std::string::npos);
  const std::string sysd = text.out.substr(text.out.find("sysD"));
  EXPECT_NE(sysd.substr(0, sysd.find('\n')).find(" -"), std::string::npos);
}

TEST(Breakdown, PartialFailure) {
  EXPECT_EQ(Cli(Args("breakdown", "partial.jsonl")).status, kExitPartial);
}

TEST(Arguments, UsageErrors) {
  EXPECT_EQ(Cli({}).status, kExitFatal);
  EXPECT_EQ(Cli({"score"}).status, kExitFatal);
  EXPECT_EQ(Cli(Args("score", "identity.jsonl", {"--mode", "fuzzy"})).status, kExitFatal);
  EXPECT_EQ(Cli(Args("evaluate", "graded.jsonl")).status, kExitFatal);  // no --analysis
  EXPECT_EQ(Cli({"frobnicate"}).status, kExitFatal);
  CliRun help = Cli({"--help"});
  EXPECT_EQ(help.status, kExitOk);
  EXPECT_NE(help.out.find("score"), std::string::npos);
}

}  // namespace
}  // namespace propeval
