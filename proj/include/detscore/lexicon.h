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

#ifndef DETSCORE_LEXICON_H_
#define DETSCORE_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "detscore/normalize.h"

namespace detscore {

// The candidate list a term must belong to before it can be reported. Members
// are normalized with the same pipeline as documents, so membership tests take
// normalized terms.
class Lexicon {
 public:
  Lexicon(std::set<std::string, std::less<>> terms, std::string source,
          std::vector<std::string> dropped = {});

  bool Contains(std::string_view term) const {
    return terms_.find(term) != terms_.end();
  }

  const std::set<std::string, std::less<>>& terms() const { return terms_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return terms_.size(); }

  // Raw tokens that normalized away (stopwords, too short). Worth a warning,
  // not an error.
  const std::vector<std::string>& dropped() const { return dropped_; }

 private:
  std::set<std::string, std::less<>> terms_;
  std::string source_;
  std::vector<std::string> dropped_;
};

// One entry per line, '#' comments skipped. Multi-word entries contribute each
// surviving token. Throws a validation error if nothing survives.
Lexicon ParseLexicon(std::string_view text, const NormalizationConfig& config,
                     std::string source);

Lexicon LoadLexicon(const std::filesystem::path& path,
                    const NormalizationConfig& config);

}  // namespace detscore

#endif  // DETSCORE_LEXICON_H_
