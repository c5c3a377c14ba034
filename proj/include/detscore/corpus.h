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

#ifndef DETSCORE_CORPUS_H_
#define DETSCORE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace detscore {

class NormalizationConfig;

struct RawDocument {
  std::string id;
  std::string text;
};

// A document reduced to a multiset of normalized terms.
struct TokenizedDocument {
  std::string id;
  std::map<std::string, std::uint64_t, std::less<>> term_counts;
  std::uint64_t total_tokens = 0;

  void Add(const std::string& term, std::uint64_t count = 1) {
    term_counts[term] += count;
    total_tokens += count;
  }

  std::uint64_t Count(std::string_view term) const {
    auto it = term_counts.find(term);
    return it == term_counts.end() ? 0 : it->second;
  }

  friend bool operator==(const TokenizedDocument&,
                         const TokenizedDocument&) = default;
};

enum class CorpusLabel { kPositive, kNegative };

std::string_view LabelName(CorpusLabel label);

// An ordered list of documents with unique ids. Immutable after construction.
class Corpus {
 public:
  // Throws a validation error on duplicate document ids.
  Corpus(CorpusLabel label, std::vector<TokenizedDocument> documents);

  CorpusLabel label() const { return label_; }
  const std::vector<TokenizedDocument>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  std::uint64_t total_tokens() const;

  // Index of the document with `id`, or size() when absent.
  std::size_t IndexOf(std::string_view id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  CorpusLabel label_;
  std::vector<TokenizedDocument> documents_;
};

// The (positive, negative) comparison pair. Holds the invariants scoring relies
// on: labels match roles, no shared ids, and at least one positive document.
class CorpusPair {
 public:
  const Corpus& positive() const { return positive_; }
  const Corpus& negative() const { return negative_; }

 private:
  friend CorpusPair BuildPair(Corpus positive, Corpus negative);
  CorpusPair(Corpus positive, Corpus negative)
      : positive_(std::move(positive)), negative_(std::move(negative)) {}

  Corpus positive_;
  Corpus negative_;
};

// Validation errors: label mismatch, shared document id, or an empty positive
// corpus ("positive corpus empty").
CorpusPair BuildPair(Corpus positive, Corpus negative);

struct ManifestEntry {
  std::string id;
  std::filesystem::path path;  // resolved against the manifest's directory
  std::size_t line = 0;
};

// Manifest format: one `id<TAB>relative/path` entry per line; blank lines and
// lines starting with '#' are skipped.
std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& manifest);

// Reads every referenced file and normalizes it. Documents keep manifest order
// whatever the thread count; `threads` = 0 uses the OpenMP default.
Corpus LoadCorpus(const std::filesystem::path& manifest, CorpusLabel label,
                  const NormalizationConfig& config, int threads = 0);

// Reads a whole file; throws an I/O error naming the path.
std::string ReadFile(const std::filesystem::path& path);

// Relative difference of total token counts, |Tp - Tn| / max(Tp, Tn).
double CorpusLengthImbalance(const CorpusPair& pair);

inline constexpr double kImbalanceWarningThreshold = 0.25;

}  // namespace detscore

#endif  // DETSCORE_CORPUS_H_
