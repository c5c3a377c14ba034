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

#include "detscore/corpus.h"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "detscore/error.h"
#include "detscore/normalize.h"
#include "detscore/parallel.h"
#include "detscore/unicode.h"

namespace detscore {

std::string_view LabelName(CorpusLabel label) {
  return label == CorpusLabel::kPositive ? "positive" : "negative";
}

Corpus::Corpus(CorpusLabel label, std::vector<TokenizedDocument> documents)
    : label_(label), documents_(std::move(documents)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& doc : documents_) {
    if (doc.id.empty()) {
      ThrowValidation(fmt::format("{} corpus: empty document id", LabelName(label_)));
    }
    if (!seen.insert(doc.id).second) {
      ThrowValidation(fmt::format("{} corpus: duplicate document id '{}'",
                                  LabelName(label_), doc.id));
    }
  }
}

std::uint64_t Corpus::total_tokens() const {
  std::uint64_t total = 0;
  for (const auto& doc : documents_) total += doc.total_tokens;
  return total;
}

std::size_t Corpus::IndexOf(std::string_view id) const {
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].id == id) return i;
  }
  return documents_.size();
}

CorpusPair BuildPair(Corpus positive, Corpus negative) {
  if (positive.label() != CorpusLabel::kPositive ||
      negative.label() != CorpusLabel::kNegative) {
    ThrowValidation("corpus labels do not match their roles in the pair");
  }
  if (positive.empty()) {
    ThrowValidation("positive corpus empty: scoring is undefined with no positive documents");
  }
  std::unordered_set<std::string_view> ids;
  for (const auto& doc : positive.documents()) ids.insert(doc.id);
  for (const auto& doc : negative.documents()) {
    if (ids.count(doc.id) != 0) {
      ThrowValidation(fmt::format(
          "document id '{}' appears in both the positive and negative corpus",
          doc.id));
    }
  }
  return CorpusPair(std::move(positive), std::move(negative));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowIo(fmt::format("cannot open {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) ThrowIo(fmt::format("error reading {}", path.string()));
  return std::move(buf).str();
}

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& manifest) {
  const std::string text = ReadFile(manifest);
  if (!unicode::IsValidUtf8(text)) {
    throw Error(ErrorKind::kEncoding,
                fmt::format("manifest {} is not valid UTF-8", manifest.string()));
  }
  const std::filesystem::path base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::unordered_set<std::string> ids;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      ThrowValidation(fmt::format("{}:{}: expected 'id<TAB>path'",
                                  manifest.string(), line_no));
    }
    ManifestEntry entry;
    entry.id = line.substr(0, tab);
    entry.path = base / line.substr(tab + 1);
    entry.line = line_no;
    if (!ids.insert(entry.id).second) {
      ThrowValidation(fmt::format("{}:{}: duplicate document id '{}'",
                                  manifest.string(), line_no, entry.id));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

Corpus LoadCorpus(const std::filesystem::path& manifest, CorpusLabel label,
                  const NormalizationConfig& config, int threads) {
  const auto entries = ReadManifest(manifest);
  std::vector<TokenizedDocument> docs(entries.size());
  ParallelFor(entries.size(), threads, [&](std::size_t i) {
    RawDocument raw{entries[i].id, ReadFile(entries[i].path)};
    if (auto bad = unicode::FindInvalidUtf8(raw.text)) {
      throw Error(ErrorKind::kEncoding,
                  fmt::format("document '{}' ({}) is not valid UTF-8 at byte {}",
                              raw.id, entries[i].path.string(), *bad));
    }
    docs[i] = NormalizeDocument(raw, config);
  });
  return Corpus(label, std::move(docs));
}

double CorpusLengthImbalance(const CorpusPair& pair) {
  const auto p = static_cast<double>(pair.positive().total_tokens());
  const auto n = static_cast<double>(pair.negative().total_tokens());
  const double hi = std::max(p, n);
  return hi == 0.0 ? 0.0 : (hi - std::min(p, n)) / hi;
}

}  // namespace detscore
