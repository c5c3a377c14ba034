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

#include "detscore/lexicon.h"

#include <fmt/format.h>

#include <sstream>

#include "detscore/error.h"
#include "detscore/unicode.h"

namespace detscore {

Lexicon::Lexicon(std::set<std::string, std::less<>> terms, std::string source,
                 std::vector<std::string> dropped)
    : terms_(std::move(terms)),
      source_(std::move(source)),
      dropped_(std::move(dropped)) {}

Lexicon ParseLexicon(std::string_view text, const NormalizationConfig& config,
                     std::string source) {
  std::set<std::string, std::less<>> terms;
  std::vector<std::string> dropped;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    for (const auto& token : Tokenize(line)) {
      if (auto term = NormalizeToken(token, config)) {
        terms.insert(std::move(*term));
      } else {
        dropped.push_back(token);
      }
    }
  }
  if (terms.empty()) {
    ThrowValidation(fmt::format("lexicon {} is empty after normalization", source));
  }
  return Lexicon(std::move(terms), std::move(source), std::move(dropped));
}

Lexicon LoadLexicon(const std::filesystem::path& path,
                    const NormalizationConfig& config) {
  const std::string text = ReadFile(path);
  if (!unicode::IsValidUtf8(text)) {
    throw Error(ErrorKind::kEncoding,
                fmt::format("lexicon {} is not valid UTF-8", path.string()));
  }
  return ParseLexicon(text, config, path.string());
}

}  // namespace detscore
