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

#include "detscore/report.h"

#include <fmt/format.h>

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "detscore/error.h"
#include "json.hpp"

namespace detscore {

namespace {

std::string Fixed6(double x) { return fmt::format("{:.6f}", x); }

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string OptionalRank(const std::optional<double>& rank) {
  return rank ? Fixed6(*rank) : "NA";
}

void WriteStatsRows(std::ostream& out, std::span<const TermStats> rows) {
  out << "term,a_score,b_score,dist,n_pos,n_total,doc_count_pos\n";
  for (const auto& s : rows) {
    out << CsvField(s.term) << ',' << Fixed6(s.a) << ',' << Fixed6(s.b) << ','
        << Fixed6(s.dist) << ',' << s.n_pos << ',' << s.n_total << ','
        << s.doc_count_pos << '\n';
  }
}

nlohmann::ordered_json StatsJson(const TermStats& s) {
  nlohmann::ordered_json j;
  j["term"] = s.term;
  j["a_score"] = Round6(s.a);
  j["b_score"] = Round6(s.b);
  j["dist"] = Round6(s.dist);
  j["n_pos"] = s.n_pos;
  j["n_total"] = s.n_total;
  j["doc_count_pos"] = s.doc_count_pos;
  return j;
}

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& writer) {
  std::ostringstream buf;
  writer(buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) ThrowIo(fmt::format("cannot open {} for writing", path.string()));
  const std::string data = std::move(buf).str();
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) ThrowIo(fmt::format("error writing {}", path.string()));
}

}  // namespace

void FilterConfig::Validate() const {
  if (!(percentile > 0.0 && percentile < 100.0)) {
    ThrowValidation(fmt::format("percentile must be in (0, 100), got {}", percentile));
  }
  if (!std::isfinite(b_min)) ThrowValidation("b_min must be finite");
}

std::size_t NearestRank(std::size_t n, double percentile) {
  const double x = percentile / 100.0 * static_cast<double>(n);
  // Absorb rounding noise such as 75/100 * 4 = 3.0000000000000004.
  const double k = std::ceil(x - 1e-9 * std::max(1.0, x));
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1.0)), 1, n);
}

double PercentileThreshold(std::span<const double> scores, double percentile) {
  if (scores.empty()) ThrowValidation("percentile of an empty score list");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted[NearestRank(sorted.size(), percentile) - 1];
}

DeterminantReport FilterCandidates(const ScoreTable& table, const Lexicon& lexicon,
                                   const FilterConfig& config) {
  config.Validate();
  if (table.empty()) ThrowValidation("cannot filter an empty score table");
  std::vector<Fraction> scores;
  scores.reserve(table.size());
  for (const auto& s : table.stats()) scores.push_back(s.exact_a());
  std::sort(scores.begin(), scores.end());

  DeterminantReport report;
  report.config = config;
  report.universe_size = table.size();
  report.threshold = scores[NearestRank(scores.size(), config.percentile) - 1];
  report.threshold_value = report.threshold.value();
  for (const auto& s : table.stats()) {
    if (s.exact_a() > report.threshold && s.b > config.b_min &&
        lexicon.Contains(s.term)) {
      report.rows.push_back(s);
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), RanksBefore);
  return report;
}

ScoreDistribution DistributionSummary(std::span<const Fraction> scores, int bins,
                                      std::span<const double> percentiles) {
  if (scores.empty()) ThrowValidation("distribution of an empty score list");
  if (bins < 1) ThrowValidation(fmt::format("bins must be >= 1, got {}", bins));

  ScoreDistribution d;
  d.count = scores.size();
  std::vector<double> sorted;
  sorted.reserve(d.count);
  d.histogram.resize(static_cast<std::size_t>(bins));
  for (int i = 0; i < bins; ++i) {
    d.histogram[static_cast<std::size_t>(i)].lower =
        static_cast<double>(i) / static_cast<double>(bins);
  }
  for (const Fraction& a : scores) {
    if (a.den == 0 || a.num > a.den) {
      ThrowValidation(fmt::format("score {}/{} outside [0, 1]", a.num, a.den));
    }
    sorted.push_back(a.value());
    const auto idx = static_cast<std::uint64_t>(
        static_cast<Uint128>(a.num) * static_cast<unsigned>(bins) / a.den);
    d.histogram[std::min<std::uint64_t>(idx, static_cast<std::uint64_t>(bins - 1))]
        .count += 1;
  }
  std::sort(sorted.begin(), sorted.end());

  double sum = 0;
  for (double x : sorted) sum += x;
  d.mean = sum / static_cast<double>(d.count);
  double sq = 0;
  for (double x : sorted) sq += (x - d.mean) * (x - d.mean);
  d.sd = std::sqrt(sq / static_cast<double>(d.count));

  for (double p : percentiles) {
    d.percentiles[p] = sorted[NearestRank(sorted.size(), p) - 1];
  }

  const boost::math::normal_distribution<double> standard;
  d.qq.reserve(d.count);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double prob = (static_cast<double>(i) + 0.5) / static_cast<double>(d.count);
    d.qq.push_back({d.mean + d.sd * boost::math::quantile(standard, prob), sorted[i]});
  }
  return d;
}

ScoreDistribution DistributionSummary(const ScoreTable& table, int bins,
                                      std::span<const double> percentiles) {
  if (table.empty()) ThrowValidation("distribution of an empty score table");
  std::vector<Fraction> scores;
  scores.reserve(table.size());
  for (const auto& s : table.stats()) scores.push_back(s.exact_a());
  return DistributionSummary(scores, bins, percentiles);
}

void WriteReportCsv(std::ostream& out, const DeterminantReport& report) {
  WriteStatsRows(out, report.rows);
}

void WriteReportJson(std::ostream& out, const DeterminantReport& report) {
  nlohmann::ordered_json j;
  j["percentile"] = report.config.percentile;
  j["b_min"] = report.config.b_min;
  j["threshold"] = Round6(report.threshold_value);
  j["universe_size"] = report.universe_size;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& s : report.rows) j["rows"].push_back(StatsJson(s));
  out << j.dump(2) << '\n';
}

void WriteScoreTableCsv(std::ostream& out, const ScoreTable& table) {
  std::vector<TermStats> rows = table.stats();
  std::sort(rows.begin(), rows.end(), RanksBefore);
  WriteStatsRows(out, rows);
}

void WriteDistributionCsv(std::ostream& out, const ScoreDistribution& dist) {
  out << "bin_lower,count\n";
  for (const auto& bin : dist.histogram) {
    out << Fixed6(bin.lower) << ',' << bin.count << '\n';
  }
}

void WriteDistributionJson(std::ostream& out, const ScoreDistribution& dist) {
  nlohmann::ordered_json j;
  j["count"] = dist.count;
  j["mean"] = Round6(dist.mean);
  j["sd"] = Round6(dist.sd);
  nlohmann::ordered_json pct = nlohmann::ordered_json::object();
  for (const auto& [p, v] : dist.percentiles) pct[fmt::format("{:g}", p)] = Round6(v);
  j["percentiles"] = std::move(pct);
  out << j.dump(2) << '\n';
}

void WriteQqCsv(std::ostream& out, const ScoreDistribution& dist) {
  out << "theoretical,empirical\n";
  for (const auto& p : dist.qq) {
    out << Fixed6(p.theoretical) << ',' << Fixed6(p.empirical) << '\n';
  }
}

void WriteTfidfComparisonCsv(std::ostream& out,
                             std::span<const TfidfComparisonRow> rows) {
  out << "term,mean_rank_cp,mean_rank_cn\n";
  for (const auto& r : rows) {
    out << CsvField(r.term) << ',' << OptionalRank(r.mean_rank_cp) << ','
        << OptionalRank(r.mean_rank_cn) << '\n';
  }
}

void WriteTfidfComparisonJson(std::ostream& out,
                              std::span<const TfidfComparisonRow> rows) {
  auto rank = [](const std::optional<double>& r) {
    return r ? nlohmann::ordered_json(Round6(*r)) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["term"] = r.term;
    row["mean_rank_cp"] = rank(r.mean_rank_cp);
    row["mean_rank_cn"] = rank(r.mean_rank_cn);
    j.push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

std::vector<std::filesystem::path> EmitReport(const ReportArtifacts& artifacts,
                                              OutputFormat format,
                                              const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) ThrowIo(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));

  const bool csv = format != OutputFormat::kJson;
  const bool json = format != OutputFormat::kCsv;
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::function<void(std::ostream&)>& fn) {
    written.push_back(dir / name);
    WriteFile(written.back(), fn);
  };

  if (const auto* r = artifacts.report) {
    if (csv) emit(kReportCsv, [r](std::ostream& o) { WriteReportCsv(o, *r); });
    if (json) emit(kReportJson, [r](std::ostream& o) { WriteReportJson(o, *r); });
  }
  if (const auto* t = artifacts.scores; t && csv) {
    emit(kScoresCsv, [t](std::ostream& o) { WriteScoreTableCsv(o, *t); });
  }
  if (const auto* d = artifacts.distribution) {
    emit(kDistributionCsv, [d](std::ostream& o) { WriteDistributionCsv(o, *d); });
    emit(kDistributionJson, [d](std::ostream& o) { WriteDistributionJson(o, *d); });
    emit(kQqCsv, [d](std::ostream& o) { WriteQqCsv(o, *d); });
  }
  if (const auto* rows = artifacts.tfidf) {
    if (csv) emit(kTfidfCsv, [rows](std::ostream& o) { WriteTfidfComparisonCsv(o, *rows); });
    if (json) emit(kTfidfJson, [rows](std::ostream& o) { WriteTfidfComparisonJson(o, *rows); });
  }
  return written;
}

}  // namespace detscore
