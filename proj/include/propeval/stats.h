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

// Correlation and agreement statistics for metric evaluation.

#ifndef PROPEVAL_STATS_H_
#define PROPEVAL_STATS_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace propeval {

class StatsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Correlation {
  double coefficient = 0;
  double p_value = 0;  // two-sided; NaN when n < 3
};

// Pearson product-moment correlation with a two-sided p-value from the
// t-distribution with n - 2 degrees of freedom. Throws StatsError on
// mismatched lengths, n < 2, non-finite values or zero variance.
Correlation Pearson(std::span<const double> x, std::span<const double> y);

// Pair classification over all i < j. Ties are exact equality.
struct ConcordanceCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x = 0;     // includes pairs tied in both
  std::int64_t tied_y = 0;     // includes pairs tied in both
  std::int64_t pairs = 0;
  bool operator==(const ConcordanceCounts&) const = default;
};

// OpenMP all-pairs kernel and its serial reference.
ConcordanceCounts CountConcordance(std::span<const double> x,
                                   std::span<const double> y);
ConcordanceCounts CountConcordanceSerial(std::span<const double> x,
                                         std::span<const double> y);

// Kendall's tau-b. Throws StatsError when n < 2, lengths differ, or either
// vector is entirely tied.
double KendallTauB(std::span<const double> x, std::span<const double> y);
double KendallTauBSerial(std::span<const double> x, std::span<const double> y);

enum class PairOrder { kFirstLower, kFirstHigher, kTie };

struct RankedPair {
  int first = 0;   // first < second
  int second = 0;
  PairOrder order = PairOrder::kTie;
  bool operator==(const RankedPair&) const = default;
};

// Every unordered index pair, ordered by (first, second).
std::vector<RankedPair> ScoresToPairwise(std::span<const double> scores);

enum class Preferred { kB, kC };

struct PreferencePair {
  double b_score = 0;
  double c_score = 0;
  Preferred human_prefers = Preferred::kB;
};

// Fraction of pairs where the preferred item scores at least as high as
// the other one. Throws StatsError on an empty list.
double PairwiseAccuracy(std::span<const PreferencePair> pairs);

// I_x(a, b) by continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided p-value of a t statistic with `dof` degrees of freedom.
double StudentTTwoSidedPValue(double t, double dof);

}  // namespace propeval

#endif  // PROPEVAL_STATS_H_
