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

// Random score tables and lexicons, plus a direct evaluation of the three
// report predicates using integer arithmetic only.

#ifndef DETSCORE_TESTS_TESTING_RANDOM_TABLE_H_
#define DETSCORE_TESTS_TESTING_RANDOM_TABLE_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "detscore/lexicon.h"
#include "detscore/scoring.h"
#include "testing/oracle.h"

namespace detscore::testing {

inline ScoreTable RandomScoreTable(std::mt19937_64& rng, int max_terms = 80) {
  const auto dc_p = std::uniform_int_distribution<std::uint64_t>(1, 10)(rng);
  const int nterms = std::uniform_int_distribution<int>(1, max_terms)(rng);
  std::vector<TermStats> stats;
  for (int i = 0; i < nterms; ++i) {
    TermCounts c;
    c.doc_count_pos = std::uniform_int_distribution<std::uint64_t>(1, dc_p)(rng);
    c.n_pos = c.doc_count_pos + std::uniform_int_distribution<std::uint64_t>(0, 12)(rng);
    // Bias toward b = 1/2 exactly so the strict boundary gets exercised.
    const auto extra = std::uniform_int_distribution<int>(0, 3)(rng) == 0
                           ? c.n_pos
                           : std::uniform_int_distribution<std::uint64_t>(0, 30)(rng);
    c.n_total = c.n_pos + extra;
    stats.push_back(MakeTermStats(fmt::format("t{:03d}", i), c, dc_p));
  }
  return ScoreTable(dc_p, std::move(stats));
}

inline Lexicon RandomLexicon(std::mt19937_64& rng, const ScoreTable& table) {
  std::set<std::string, std::less<>> terms;
  std::bernoulli_distribution keep(0.5);
  for (const auto& s : table.stats()) {
    if (keep(rng)) terms.insert(s.term);
  }
  terms.insert("not-in-table");
  return Lexicon(std::move(terms), "random");
}

inline Rational ExactA(const TermStats& s) {
  const auto n_pos = static_cast<std::int64_t>(s.n_pos);
  const auto n_total = static_cast<std::int64_t>(s.n_total);
  const auto dcp = static_cast<std::int64_t>(s.doc_count_pos);
  const auto dc_p = static_cast<std::int64_t>(s.dc_p);
  return (Rational::Make(n_pos, n_total) + Rational::Make(dcp, dc_p)).Half();
}

// Terms satisfying all predicates for an integer percentile, in report order.
inline std::vector<std::string> DirectFilter(const ScoreTable& table,
                                             const Lexicon& lexicon, int percentile) {
  std::vector<Rational> sorted;
  for (const auto& s : table.stats()) sorted.push_back(ExactA(s));
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<std::int64_t>(sorted.size());
  const std::int64_t k = std::max<std::int64_t>(1, (percentile * n + 99) / 100);
  const Rational threshold = sorted[static_cast<std::size_t>(k - 1)];

  struct Row {
    Rational a;
    std::string term;
  };
  std::vector<Row> rows;
  for (const auto& s : table.stats()) {
    const bool above = threshold < ExactA(s);
    const bool b_ok = 2 * s.n_pos > s.n_total;
    if (above && b_ok && lexicon.Contains(s.term)) rows.push_back({ExactA(s), s.term});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.a < y.a || y.a < x.a) return y.a < x.a;
    return x.term < y.term;
  });
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.term);
  return out;
}

}  // namespace detscore::testing

#endif  // DETSCORE_TESTS_TESTING_RANDOM_TABLE_H_
