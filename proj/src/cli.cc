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

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "propeval/datasets.h"
#include "propeval/lexicon.h"
#include "propeval/report.h"

namespace propeval {
namespace {

class FatalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Lexicon LoadLexicon(const RunConfig& config) {
  const std::filesystem::path dir =
      config.lexicon_dir ? std::filesystem::path(*config.lexicon_dir)
                         : Lexicon::DefaultDirectory();
  LexiconPaths paths = LexiconPaths::InDirectory(dir);
  if (config.colors) paths.colors = *config.colors;
  if (config.counts) paths.counts = *config.counts;
  if (config.sizes) paths.sizes = *config.sizes;
  return Lexicon::Load(paths);
}

JudgmentDataset LoadDataset(const RunConfig& config, bool strict) {
  if (config.judgments.empty()) throw FatalError("--judgments is required");
  if (config.parses.empty()) throw FatalError("--parses is required");
  LoadOptions options;
  options.strict = strict;
  options.exclude_candidate_in_reference = config.exclude_candidate_in_reference;
  return LoadJudgments(config.judgments, config.parses, options);
}

// Writes `payload` to --out or `out`.
void Emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (!config.out) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw FatalError("cannot write '" + *config.out + "'");
  file << payload;
  if (!file) throw FatalError("error writing '" + *config.out + "'");
}

// Runs `body`, mapping exceptions to the fatal exit code.
int Guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "propeval: error: " << e.what() << '\n';
    return kExitFatal;
  }
}

void ReportIssues(const std::vector<RecordIssue>& issues, std::ostream& err) {
  for (const RecordIssue& issue : issues) {
    err << "propeval: record failed: " << issue.ToString() << '\n';
  }
}

int PartialOrOk(const JudgmentDataset& dataset, const ScoredDataset& scored,
                std::ostream& err) {
  ReportIssues(dataset.issues, err);
  ReportIssues(scored.errors, err);
  return dataset.issues.empty() && scored.errors.empty() ? kExitOk : kExitPartial;
}

std::string ChooseQuestion(const RunConfig& config, const JudgmentDataset& dataset) {
  if (config.question) return *config.question;
  std::set<std::string> questions;
  for (const auto& [system, scores] : dataset.system_human) {
    for (const auto& [question, value] : scores) questions.insert(question);
  }
  if (questions.size() != 1) {
    throw FatalError(
        "--question is required when the judgments carry " +
        std::to_string(questions.size()) + " human question ids");
  }
  return *questions.begin();
}

void AddCommonOptions(CLI::App* cmd, RunConfig& config, std::string& mode) {
  cmd->add_option("--judgments", config.judgments, "Judgments JSON-lines file")
      ->required();
  cmd->add_option("--parses", config.parses, "Companion CoNLL-U file")->required();
  cmd->add_option("--mode", mode, "Tuple matching: exact or synonym")
      ->check(CLI::IsMember({"exact", "synonym"}));
  cmd->add_option("--lexicon-dir", config.lexicon_dir, "Lexicon data directory");
  cmd->add_option("--colors", config.colors, "Color word list override");
  cmd->add_option("--counts", config.counts, "Count word list override");
  cmd->add_option("--sizes", config.sizes, "Size word list override");
  cmd->add_flag("--exclude-candidate-in-reference",
                config.exclude_candidate_in_reference,
                "Skip records whose candidate is among its references");
  cmd->add_option("--out", config.out, "Output file (default: stdout)");
}

}  // namespace

int CmdScore(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Lexicon lexicon = LoadLexicon(config);
    const JudgmentDataset dataset = LoadDataset(config, /*strict=*/false);
    const ScoredDataset scored =
        ScoreDataset(dataset, lexicon, {config.mode, config.emit_graphs});
    std::string payload;
    for (const RecordResult& result : scored.results) {
      payload += RecordJson(result).dump();
      payload += '\n';
    }
    Emit(config, payload, out);
    return PartialOrOk(dataset, scored, err);
  });
}

int CmdEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Lexicon lexicon = LoadLexicon(config);
    const JudgmentDataset dataset = LoadDataset(config, /*strict=*/true);
    const ScoredDataset scored = ScoreDataset(dataset, lexicon, {config.mode, false});
    if (!scored.errors.empty()) {
      ReportIssues(scored.errors, err);
      throw FatalError("evaluation needs every record to score");
    }
    OrderedJson report;
    if (config.analysis == "system") {
      report = SystemLevelJson(
          SystemLevelEval(dataset, scored, ChooseQuestion(config, dataset)));
    } else if (config.analysis == "caption") {
      report = CaptionLevelJson(CaptionLevelEval(dataset, scored));
    } else if (config.analysis == "preference") {
      report = PreferenceJson(PreferenceEval(dataset, scored));
    } else {
      throw FatalError("--analysis must be system, caption or preference");
    }
    report["mode"] = std::string(MatchModeName(config.mode));
    Emit(config, report.dump(2) + "\n", out);
    return kExitOk;
  });
}

int CmdBreakdown(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Lexicon lexicon = LoadLexicon(config);
    const JudgmentDataset dataset = LoadDataset(config, /*strict=*/false);
    const ScoredDataset scored = ScoreDataset(dataset, lexicon, {config.mode, false});
    const std::vector<BreakdownRow> rows = Breakdown(dataset, scored);
    if (config.format == "text") {
      Emit(config, BreakdownTable(rows), out);
    } else {
      Emit(config, BreakdownJson(rows).dump(2) + "\n", out);
    }
    return PartialOrOk(dataset, scored, err);
  });
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scene-graph proposition scoring for image captions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string mode = "synonym";

  CLI::App* score = app.add_subcommand("score", "Score every record (JSON lines)");
  AddCommonOptions(score, config, mode);
  score->add_flag("--emit-graphs", config.emit_graphs,
                  "Include candidate and reference scene graphs");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Correlate scores with human judgments");
  AddCommonOptions(evaluate, config, mode);
  evaluate->add_option("--analysis", config.analysis, "system, caption or preference")
      ->required()
      ->check(CLI::IsMember({"system", "caption", "preference"}));
  evaluate->add_option("--question", config.question,
                       "Human judgment question id (system analysis)");

  CLI::App* breakdown =
      app.add_subcommand("breakdown", "Per-category F-scores per system");
  AddCommonOptions(breakdown, config, mode);
  breakdown->add_option("--format", config.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "propeval: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    }
    return kExitFatal;
  }
  config.mode = *ParseMatchMode(mode);

  if (score->parsed()) return CmdScore(config, out, err);
  if (evaluate->parsed()) return CmdEvaluate(config, out, err);
  return CmdBreakdown(config, out, err);
}

}  // namespace propeval
