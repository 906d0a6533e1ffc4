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

#include "propeval/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace propeval {
namespace {

void CheckSample(std::span<const double> x, std::span<const double> y,
                 std::size_t min_size) {
  if (x.size() != y.size()) {
    throw StatsError("sample lengths differ: " + std::to_string(x.size()) +
                     " vs " + std::to_string(y.size()));
  }
  if (x.size() < min_size) {
    throw StatsError("need at least " + std::to_string(min_size) +
                     " paired values, got " + std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw StatsError("non-finite value at position " + std::to_string(i));
    }
  }
}

int Sign(double d) { return (d > 0) - (d < 0); }

// Modified Lentz evaluation of the incomplete beta continued fraction.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1;
  const double qam = a - 1;
  double c = 1;
  double d = 1 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1) < kEpsilon) break;
  }
  return h;
}

double TauFromCounts(const ConcordanceCounts& counts) {
  const double untied_x = static_cast<double>(counts.pairs - counts.tied_x);
  const double untied_y = static_cast<double>(counts.pairs - counts.tied_y);
  if (untied_x == 0 || untied_y == 0) {
    throw StatsError("Kendall tau is undefined: a vector is entirely tied");
  }
  return static_cast<double>(counts.concordant - counts.discordant) /
         std::sqrt(untied_x * untied_y);
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (a <= 0 || b <= 0) throw StatsError("incomplete beta needs a, b > 0");
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1) / (a + b + 2)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1 - front * BetaContinuedFraction(b, a, 1 - x) / b;
}

double StudentTTwoSidedPValue(double t, double dof) {
  if (dof <= 0) throw StatsError("degrees of freedom must be positive");
  if (std::isinf(t)) return 0;
  return RegularizedIncompleteBeta(dof / 2, 0.5, dof / (dof + t * t));
}

Correlation Pearson(std::span<const double> x, std::span<const double> y) {
  CheckSample(x, y, 2);
  const double n = static_cast<double>(x.size());
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw StatsError("Pearson correlation is undefined: zero variance");
  }
  Correlation result;
  result.coefficient = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  if (x.size() < 3) {
    result.p_value = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  const double dof = n - 2;
  const double r2 = result.coefficient * result.coefficient;
  // t^2 = dof * r^2 / (1 - r^2), so dof / (dof + t^2) = 1 - r^2.
  result.p_value = r2 >= 1 ? 0 : RegularizedIncompleteBeta(dof / 2, 0.5, 1 - r2);
  return result;
}

ConcordanceCounts CountConcordanceSerial(std::span<const double> x,
                                         std::span<const double> y) {
  ConcordanceCounts counts;
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const int sx = Sign(x[i] - x[j]);
      const int sy = Sign(y[i] - y[j]);
      if (sx == 0) ++counts.tied_x;
      if (sy == 0) ++counts.tied_y;
      if (sx * sy > 0) ++counts.concordant;
      if (sx * sy < 0) ++counts.discordant;
    }
  }
  counts.pairs = n * (n - 1) / 2;
  return counts;
}

ConcordanceCounts CountConcordance(std::span<const double> x,
                                   std::span<const double> y) {
  std::int64_t concordant = 0, discordant = 0, tied_x = 0, tied_y = 0;
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  const double* px = x.data();
  const double* py = y.data();
#pragma omp parallel for schedule(dynamic, 64) \
    reduction(+ : concordant, discordant, tied_x, tied_y)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const int sx = Sign(px[i] - px[j]);
      const int sy = Sign(py[i] - py[j]);
      tied_x += (sx == 0);
      tied_y += (sy == 0);
      concordant += (sx * sy > 0);
      discordant += (sx * sy < 0);
    }
  }
  ConcordanceCounts counts;
  counts.concordant = concordant;
  counts.discordant = discordant;
  counts.tied_x = tied_x;
  counts.tied_y = tied_y;
  counts.pairs = n * (n - 1) / 2;
  return counts;
}

double KendallTauB(std::span<const double> x, std::span<const double> y) {
  CheckSample(x, y, 2);
  return TauFromCounts(CountConcordance(x, y));
}

double KendallTauBSerial(std::span<const double> x, std::span<const double> y) {
  CheckSample(x, y, 2);
  return TauFromCounts(CountConcordanceSerial(x, y));
}

std::vector<RankedPair> ScoresToPairwise(std::span<const double> scores) {
  std::vector<RankedPair> pairs;
  const int n = static_cast<int>(scores.size());
  if (n > 1) pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairOrder order = PairOrder::kTie;
      if (scores[i] < scores[j]) order = PairOrder::kFirstLower;
      if (scores[i] > scores[j]) order = PairOrder::kFirstHigher;
      pairs.push_back({i, j, order});
    }
  }
  return pairs;
}

double PairwiseAccuracy(std::span<const PreferencePair> pairs) {
  if (pairs.empty()) throw StatsError("pairwise accuracy needs at least one pair");
  int accurate = 0;
  for (const PreferencePair& p : pairs) {
    const bool ok = p.human_prefers == Preferred::kB ? p.b_score >= p.c_score
                                                     : p.c_score >= p.b_score;
    accurate += ok;
  }
  return static_cast<double>(accurate) / static_cast<double>(pairs.size());
}

}  // namespace propeval
