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

// Text normalization: tokenize, lowercase, drop stopwords, lemmatize.

#ifndef DETSCORE_NORMALIZE_H_
#define DETSCORE_NORMALIZE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "detscore/corpus.h"

namespace detscore {

using StopwordSet = std::set<std::string, std::less<>>;
using LemmaTable = std::unordered_map<std::string, std::string>;

class NormalizationConfig {
 public:
  // Throws a validation error if a stopword or lemma key is not lowercase, or
  // if a lemma value is itself a key mapping somewhere else.
  NormalizationConfig(StopwordSet stopwords, LemmaTable lemma_table,
                      bool suffix_rules_enabled = true,
                      std::size_t min_token_length = 1);

  // Shipped English stopword list and lemma table, suffix rules on.
  static NormalizationConfig Default();

  const StopwordSet& stopwords() const { return stopwords_; }
  const LemmaTable& lemma_table() const { return lemma_table_; }
  bool suffix_rules_enabled() const { return suffix_rules_enabled_; }
  std::size_t min_token_length() const { return min_token_length_; }

  bool IsStopword(std::string_view token) const {
    return stopwords_.find(token) != stopwords_.end();
  }

  // Dictionary step: the mapped lemma for a table key, the token itself for a
  // table value, nullopt otherwise.
  std::optional<std::string> LookupLemma(const std::string& token) const;

 private:
  StopwordSet stopwords_;
  LemmaTable lemma_table_;
  std::set<std::string, std::less<>> lemma_values_;
  bool suffix_rules_enabled_;
  std::size_t min_token_length_;
};

// Splits on Unicode whitespace and trims leading/trailing non-alphanumeric
// characters from each piece. Internal punctuation survives ("omega-3").
std::vector<std::string> Tokenize(std::string_view text);

// One application of the dictionary lookup or, failing that, the first
// matching suffix rule. Returns the input unchanged when nothing applies.
std::string LemmatizeStep(std::string_view token,
                          const NormalizationConfig& config);

// LemmatizeStep repeated to a fixed point, so Lemmatize is idempotent.
// `token` is expected to be lowercase.
std::string Lemmatize(std::string_view token,
                      const NormalizationConfig& config);

// Full per-token pipeline for a token produced by Tokenize: lowercase, length
// filter, stopword check on the surface form, lemmatize, stopword check on the
// lemma. Returns nullopt when the token is dropped.
std::optional<std::string> NormalizeToken(std::string_view raw_token,
                                          const NormalizationConfig& config);

TokenizedDocument NormalizeDocument(const RawDocument& raw,
                                    const NormalizationConfig& config);

// Normalizes a batch of documents in parallel over documents. The output is
// index-aligned with the input.
std::vector<TokenizedDocument> NormalizeDocuments(
    std::span<const RawDocument> raw, const NormalizationConfig& config,
    int threads = 0);

namespace serial {
std::vector<TokenizedDocument> NormalizeDocuments(
    std::span<const RawDocument> raw, const NormalizationConfig& config);
}  // namespace serial

// One lowercase word per line; blank lines and '#' comments skipped.
StopwordSet ParseStopwords(std::string_view text);
StopwordSet LoadStopwords(const std::filesystem::path& path);

// `surface<TAB>lemma` per line; blank lines and '#' comments skipped.
LemmaTable ParseLemmaTable(std::string_view text,
                           std::string_view source = "<lemma table>");
LemmaTable LoadLemmaTable(const std::filesystem::path& path);

// Contents of data/stopwords_en.txt and data/lemmas_en.tsv, compiled in.
std::string_view embedded_stopwords();
std::string_view embedded_lemma_table();

}  // namespace detscore

#endif  // DETSCORE_NORMALIZE_H_
