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

// Command-line front end. The subcommands are library functions so that
// exit codes and output streams can be tested in-process.
//
//   propeval score     --judgments J --parses P [--emit-graphs]
//   propeval evaluate  --judgments J --parses P --analysis system|caption|preference
//   propeval breakdown --judgments J --parses P [--format json|text]
//
// Exit codes: 0 success, 1 fatal error, 2 some records failed (score and
// breakdown only; the failures are listed on the error stream).

#ifndef PROPEVAL_CLI_H_
#define PROPEVAL_CLI_H_

#include <optional>
#include <ostream>
#include <string>

#include "propeval/scoring.h"

namespace propeval {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

struct RunConfig {
  MatchMode mode = MatchMode::kSynonym;
  std::string judgments;
  std::string parses;
  std::optional<std::string> lexicon_dir;
  std::optional<std::string> colors;
  std::optional<std::string> counts;
  std::optional<std::string> sizes;
  std::optional<std::string> out;  // standard output when unset
  bool emit_graphs = false;
  bool exclude_candidate_in_reference = false;
  std::string analysis;            // evaluate
  std::optional<std::string> question;
  std::string format = "json";     // breakdown
};

int CmdScore(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdBreakdown(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments and dispatches to a subcommand.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace propeval

#endif  // PROPEVAL_CLI_H_
