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

// Classical TF-IDF, used as a ranking baseline next to the determinant score:
//   tfidf(t, d) = f(t, d) * log(|D| / DF(t))
// with DF computed inside the corpus under analysis.

#ifndef DETSCORE_TFIDF_H_
#define DETSCORE_TFIDF_H_

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detscore/corpus.h"

namespace detscore {

inline constexpr double kNaturalLog = std::numbers::e;

class DocumentFrequencyIndex {
 public:
  explicit DocumentFrequencyIndex(const Corpus& corpus);

  std::uint64_t corpus_size() const { return corpus_size_; }
  std::uint64_t df(std::string_view term) const;

 private:
  std::uint64_t corpus_size_;
  std::unordered_map<std::string, std::uint64_t> df_;
};

// Score from raw counts. Zero when tf = 0 or df = corpus_size.
double TfIdf(std::uint64_t tf, std::uint64_t df, std::uint64_t corpus_size,
             double log_base = kNaturalLog);

double TfIdf(std::string_view term, const TokenizedDocument& doc,
             const Corpus& corpus, double log_base = kNaturalLog);

// Exact three-way comparison of tf1*log(N/df1) against tf2*log(N/df2),
// independent of the logarithm base. Returns <0, 0, >0.
int CompareTfIdf(std::uint64_t tf1, std::uint64_t df1, std::uint64_t tf2,
                 std::uint64_t df2, std::uint64_t corpus_size);

struct RankedTerm {
  std::string term;
  std::uint64_t tf = 0;
  double score = 0;
  std::uint64_t rank = 0;  // 1-based, no shared ranks
};

// All terms of `doc` by descending score, ties broken by ascending term. The
// order is computed exactly; `log_base` only affects the reported scores.
std::vector<RankedTerm> RankTerms(const TokenizedDocument& doc,
                                  const DocumentFrequencyIndex& index,
                                  double log_base = kNaturalLog);

struct MeanRank {
  std::string term;
  CorpusLabel label = CorpusLabel::kPositive;
  std::vector<std::pair<std::string, std::uint64_t>> per_doc_ranks;
  std::optional<double> mean_rank;  // nullopt: the term is absent ("NA")
};

using RankMap = std::unordered_map<std::string, std::uint64_t>;

// Rank maps for every document of a corpus, index-aligned with its documents.
// Parallel over documents.
std::vector<RankMap> RankCorpus(const Corpus& corpus, int threads = 0);

namespace serial {
std::vector<RankMap> RankCorpus(const Corpus& corpus);
}  // namespace serial

// Per-document rank lookup for a whole corpus, built once.
class CorpusRanking {
 public:
  explicit CorpusRanking(const Corpus& corpus, int threads = 0)
      : CorpusRanking(corpus, RankCorpus(corpus, threads)) {}
  CorpusRanking(const Corpus& corpus, std::vector<RankMap> ranks);

  // Mean over exactly the documents that contain the term.
  MeanRank MeanRankOf(std::string_view term) const;

  // Rank of `term` in document `doc_index`, nullopt if it does not occur.
  std::optional<std::uint64_t> RankOf(std::size_t doc_index,
                                      const std::string& term) const;

  std::size_t size() const { return ranks_.size(); }

 private:
  CorpusLabel label_;
  std::vector<std::string> ids_;
  std::vector<RankMap> ranks_;
};

MeanRank ComputeMeanRank(std::string_view term, const Corpus& corpus);

struct TfidfComparisonRow {
  std::string term;
  std::optional<double> mean_rank_cp;
  std::optional<double> mean_rank_cn;
};

// Mean rank of each term in C_p and in C_n, in the given term order.
std::vector<TfidfComparisonRow> CompareMeanRanks(
    std::span<const std::string> terms, const CorpusPair& pair, int threads = 0);

}  // namespace detscore

#endif  // DETSCORE_TFIDF_H_
