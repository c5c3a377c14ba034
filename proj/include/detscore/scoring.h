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

// Comparative determinant scoring over a (positive, negative) corpus pair.
//
// For a term t drawn from the positive corpus C_p:
//   b(t)    = n(t, C_p) / n(t, C_p ∪ C_n)      proportional occurrence
//   dist(t) = DC_p(t) / DC_p                    document distribution in C_p
//   a(t)    = (b(t) + dist(t)) / 2              final score, in (0, 1]
// All inputs are integer counts; division happens only when a double is
// requested. Ordering and thresholding use the exact fractions.

#ifndef DETSCORE_SCORING_H_
#define DETSCORE_SCORING_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "detscore/corpus.h"
#include "detscore/fraction.h"

namespace detscore {

struct TermCounts {
  std::uint64_t n_pos = 0;          // occurrences across C_p
  std::uint64_t n_total = 0;        // occurrences across C_p and C_n
  std::uint64_t doc_count_pos = 0;  // C_p documents containing the term

  friend bool operator==(const TermCounts&, const TermCounts&) = default;
};

struct ScoreValues {
  double b = 0;
  double dist = 0;
  double a = 0;
};

struct TermStats {
  std::string term;
  std::uint64_t n_pos = 0;
  std::uint64_t n_total = 0;
  std::uint64_t doc_count_pos = 0;
  std::uint64_t dc_p = 0;
  double b = 0;
  double dist = 0;
  double a = 0;

  Fraction exact_b() const { return {n_pos, n_total}; }
  Fraction exact_dist() const { return {doc_count_pos, dc_p}; }
  // (n_pos * dc_p + doc_count_pos * n_total) / (2 * n_total * dc_p)
  Fraction exact_a() const;

  friend bool operator==(const TermStats&, const TermStats&) = default;
};

// Throws a validation error unless 1 <= n_pos <= n_total, 1 <= doc_count_pos
// <= min(n_pos, dc_p), and dc_p >= 1.
ScoreValues Score(std::uint64_t n_pos, std::uint64_t n_total,
                  std::uint64_t doc_count_pos, std::uint64_t dc_p);

TermStats MakeTermStats(std::string term, const TermCounts& counts,
                        std::uint64_t dc_p);

// One TermStats per term of the positive corpus, sorted by term.
class ScoreTable {
 public:
  ScoreTable(std::uint64_t dc_p, std::vector<TermStats> stats);

  std::uint64_t dc_p() const { return dc_p_; }
  const std::vector<TermStats>& stats() const { return stats_; }
  std::size_t size() const { return stats_.size(); }
  bool empty() const { return stats_.empty(); }

  // nullptr when the term is not in the universe.
  const TermStats* Find(std::string_view term) const;

  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

 private:
  std::uint64_t dc_p_;
  std::vector<TermStats> stats_;
};

// The scoring universe B: every term occurring in some positive document.
// Throws a validation error for an empty corpus.
std::set<std::string, std::less<>> TermUniverse(const Corpus& positive);

// Throws ErrorKind::kNotInUniverse when the term never occurs in C_p.
TermCounts CountStats(const CorpusPair& pair, std::string_view term);

// Counting is parallel over documents with per-thread maps merged afterwards;
// integer sums make the result independent of the thread count.
ScoreTable ScoreAll(const CorpusPair& pair, int threads = 0);

namespace serial {
ScoreTable ScoreAll(const CorpusPair& pair);
}  // namespace serial

// Descending exact a, then ascending term.
bool RanksBefore(const TermStats& lhs, const TermStats& rhs);

}  // namespace detscore

#endif  // DETSCORE_SCORING_H_
