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

#include "detscore/tfidf.h"

#include <fmt/format.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "detscore/error.h"
#include "detscore/parallel.h"

namespace detscore {

DocumentFrequencyIndex::DocumentFrequencyIndex(const Corpus& corpus)
    : corpus_size_(corpus.size()) {
  for (const auto& doc : corpus.documents()) {
    for (const auto& [term, count] : doc.term_counts) ++df_[term];
  }
}

std::uint64_t DocumentFrequencyIndex::df(std::string_view term) const {
  auto it = df_.find(std::string(term));
  return it == df_.end() ? 0 : it->second;
}

double TfIdf(std::uint64_t tf, std::uint64_t df, std::uint64_t corpus_size,
             double log_base) {
  if (tf == 0 || df == 0 || df >= corpus_size) return 0.0;
  const double idf = std::log(static_cast<double>(corpus_size) /
                              static_cast<double>(df));
  const double scaled = log_base == kNaturalLog ? idf : idf / std::log(log_base);
  return static_cast<double>(tf) * scaled;
}

double TfIdf(std::string_view term, const TokenizedDocument& doc,
             const Corpus& corpus, double log_base) {
  if (corpus.empty()) ThrowValidation("tf-idf over an empty corpus");
  const std::uint64_t tf = doc.Count(term);
  if (tf == 0) return 0.0;
  std::uint64_t df = 0;
  for (const auto& d : corpus.documents()) {
    if (d.Count(term) > 0) ++df;
  }
  return TfIdf(tf, df, corpus.size(), log_base);
}

int CompareTfIdf(std::uint64_t tf1, std::uint64_t df1, std::uint64_t tf2,
                 std::uint64_t df2, std::uint64_t corpus_size) {
  const bool zero1 = tf1 == 0 || df1 == 0 || df1 >= corpus_size;
  const bool zero2 = tf2 == 0 || df2 == 0 || df2 >= corpus_size;
  if (zero1 || zero2) return zero1 == zero2 ? 0 : (zero1 ? -1 : 1);
  if (tf1 == tf2 && df1 == df2) return 0;

  const double s1 = TfIdf(tf1, df1, corpus_size);
  const double s2 = TfIdf(tf2, df2, corpus_size);
  if (std::abs(s1 - s2) > 1e-9 * std::max(s1, s2)) return s1 < s2 ? -1 : 1;

  // Too close for doubles: compare (N/df1)^tf1 with (N/df2)^tf2 exactly,
  // i.e. N^tf1 * df2^tf2 against N^tf2 * df1^tf1 with N^min(tf) cancelled.
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const std::uint64_t common = std::min(tf1, tf2);
  const cpp_int n(corpus_size);
  const cpp_int lhs = pow(n, static_cast<unsigned>(tf1 - common)) *
                      pow(cpp_int(df2), static_cast<unsigned>(tf2));
  const cpp_int rhs = pow(n, static_cast<unsigned>(tf2 - common)) *
                      pow(cpp_int(df1), static_cast<unsigned>(tf1));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::vector<RankedTerm> RankTerms(const TokenizedDocument& doc,
                                  const DocumentFrequencyIndex& index,
                                  double log_base) {
  struct Entry {
    const std::string* term;
    std::uint64_t tf;
    std::uint64_t df;
  };
  std::vector<Entry> entries;
  entries.reserve(doc.term_counts.size());
  for (const auto& [term, tf] : doc.term_counts) {
    entries.push_back({&term, tf, index.df(term)});
  }
  const std::uint64_t n = index.corpus_size();
  std::sort(entries.begin(), entries.end(), [n](const Entry& x, const Entry& y) {
    const int c = CompareTfIdf(x.tf, x.df, y.tf, y.df, n);
    if (c != 0) return c > 0;
    return *x.term < *y.term;
  });
  std::vector<RankedTerm> ranked;
  ranked.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    ranked.push_back({*e.term, e.tf, TfIdf(e.tf, e.df, n, log_base), i + 1});
  }
  return ranked;
}

namespace {

RankMap ToRankMap(const TokenizedDocument& doc,
                  const DocumentFrequencyIndex& index) {
  RankMap ranks;
  ranks.reserve(doc.term_counts.size());
  for (auto& r : RankTerms(doc, index)) ranks.emplace(std::move(r.term), r.rank);
  return ranks;
}

}  // namespace

std::vector<RankMap> RankCorpus(const Corpus& corpus, int threads) {
  const DocumentFrequencyIndex index(corpus);
  const auto& docs = corpus.documents();
  std::vector<RankMap> out(docs.size());
  ParallelFor(docs.size(), threads,
              [&](std::size_t i) { out[i] = ToRankMap(docs[i], index); });
  return out;
}

namespace serial {

std::vector<RankMap> RankCorpus(const Corpus& corpus) {
  const DocumentFrequencyIndex index(corpus);
  std::vector<RankMap> out;
  out.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) out.push_back(ToRankMap(doc, index));
  return out;
}

}  // namespace serial

CorpusRanking::CorpusRanking(const Corpus& corpus, std::vector<RankMap> ranks)
    : label_(corpus.label()), ranks_(std::move(ranks)) {
  if (ranks_.size() != corpus.size()) {
    ThrowValidation("rank maps do not match the corpus documents");
  }
  ids_.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) ids_.push_back(doc.id);
}

std::optional<std::uint64_t> CorpusRanking::RankOf(std::size_t doc_index,
                                                    const std::string& term) const {
  const RankMap& ranks = ranks_.at(doc_index);
  auto it = ranks.find(term);
  if (it == ranks.end()) return std::nullopt;
  return it->second;
}

MeanRank CorpusRanking::MeanRankOf(std::string_view term) const {
  MeanRank result;
  result.term = std::string(term);
  result.label = label_;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (auto rank = RankOf(i, result.term)) {
      result.per_doc_ranks.emplace_back(ids_[i], *rank);
      sum += *rank;
    }
  }
  if (!result.per_doc_ranks.empty()) {
    result.mean_rank = static_cast<double>(sum) /
                       static_cast<double>(result.per_doc_ranks.size());
  }
  return result;
}

MeanRank ComputeMeanRank(std::string_view term, const Corpus& corpus) {
  return CorpusRanking(corpus, 1).MeanRankOf(term);
}

std::vector<TfidfComparisonRow> CompareMeanRanks(
    std::span<const std::string> terms, const CorpusPair& pair, int threads) {
  std::vector<TfidfComparisonRow> rows;
  if (terms.empty()) return rows;
  const CorpusRanking cp(pair.positive(), threads);
  const CorpusRanking cn(pair.negative(), threads);
  rows.reserve(terms.size());
  for (const auto& term : terms) {
    rows.push_back({term, cp.MeanRankOf(term).mean_rank, cn.MeanRankOf(term).mean_rank});
  }
  return rows;
}

}  // namespace detscore
