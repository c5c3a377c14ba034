// Copyright 2026 The detscore Authors.
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

// Candidate filtering, score-distribution summaries, and file export.

#ifndef DETSCORE_REPORT_H_
#define DETSCORE_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "detscore/fraction.h"
#include "detscore/lexicon.h"
#include "detscore/scoring.h"
#include "detscore/tfidf.h"

namespace detscore {

struct FilterConfig {
  double percentile = 75.0;  // threshold over all a-scores of the universe
  double b_min = 0.5;        // b must be strictly greater

  // Throws a validation error unless 0 < percentile < 100.
  void Validate() const;
};

// 1-based nearest-rank position ceil(p/100 * n), clamped to [1, n].
std::size_t NearestRank(std::size_t n, double percentile);

// Nearest-rank percentile of `scores`. Throws a validation error when empty.
double PercentileThreshold(std::span<const double> scores, double percentile);

struct DeterminantReport {
  double threshold_value = 0;
  Fraction threshold;  // exact a-score at the configured percentile
  std::vector<TermStats> rows;  // descending a, then ascending term
  std::size_t universe_size = 0;
  FilterConfig config;
};

// Keeps terms with a > threshold, b > b_min, and lexicon membership. The
// threshold is taken over every term in the table, before the b filter.
DeterminantReport FilterCandidates(const ScoreTable& table, const Lexicon& lexicon,
                                   const FilterConfig& config);

struct HistogramBin {
  double lower = 0;
  std::uint64_t count = 0;
};

struct QqPoint {
  double theoretical = 0;
  double empirical = 0;
};

struct ScoreDistribution {
  std::size_t count = 0;
  double mean = 0;
  double sd = 0;  // population
  std::vector<HistogramBin> histogram;  // equal-width bins over [0, 1]
  std::map<double, double> percentiles;
  std::vector<QqPoint> qq;
};

inline constexpr int kDefaultBins = 20;
inline constexpr double kSummaryPercentiles[] = {25.0, 50.0, 75.0, 90.0};

// Summary over every a-score in the table. Q-Q pairs put the i-th smallest
// score against mean + sd * Phi^-1((i - 0.5) / n).
ScoreDistribution DistributionSummary(
    std::span<const Fraction> scores, int bins = kDefaultBins,
    std::span<const double> percentiles = kSummaryPercentiles);
ScoreDistribution DistributionSummary(
    const ScoreTable& table, int bins = kDefaultBins,
    std::span<const double> percentiles = kSummaryPercentiles);

enum class OutputFormat { kCsv, kJson, kBoth };

// Writers. CSV numbers carry six decimals; output depends only on the inputs.
void WriteReportCsv(std::ostream& out, const DeterminantReport& report);
void WriteReportJson(std::ostream& out, const DeterminantReport& report);
void WriteScoreTableCsv(std::ostream& out, const ScoreTable& table);
void WriteDistributionCsv(std::ostream& out, const ScoreDistribution& dist);
void WriteDistributionJson(std::ostream& out, const ScoreDistribution& dist);
void WriteQqCsv(std::ostream& out, const ScoreDistribution& dist);
void WriteTfidfComparisonCsv(std::ostream& out,
                             std::span<const TfidfComparisonRow> rows);
void WriteTfidfComparisonJson(std::ostream& out,
                              std::span<const TfidfComparisonRow> rows);

// File names used by EmitReport inside the output directory.
inline constexpr const char* kReportCsv = "determinants.csv";
inline constexpr const char* kReportJson = "determinants.json";
inline constexpr const char* kScoresCsv = "scores.csv";
inline constexpr const char* kDistributionCsv = "distribution.csv";
inline constexpr const char* kDistributionJson = "distribution.json";
inline constexpr const char* kQqCsv = "qq.csv";
inline constexpr const char* kTfidfCsv = "tfidf_comparison.csv";
inline constexpr const char* kTfidfJson = "tfidf_comparison.json";

// Any member may be null; only the present artifacts are written. The
// distribution files are format-independent (CSV plus JSON sidecar).
struct ReportArtifacts {
  const DeterminantReport* report = nullptr;
  const ScoreTable* scores = nullptr;
  const ScoreDistribution* distribution = nullptr;
  const std::vector<TfidfComparisonRow>* tfidf = nullptr;
};

// Creates `dir` if needed; returns the paths written. Throws an I/O error
// naming the path on failure.
std::vector<std::filesystem::path> EmitReport(const ReportArtifacts& artifacts,
                                              OutputFormat format,
                                              const std::filesystem::path& dir);

}  // namespace detscore

#endif  // DETSCORE_REPORT_H_
