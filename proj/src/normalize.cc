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

#include "detscore/normalize.h"

#include <fmt/format.h>

#include <array>
#include <utility>

#include "detscore/error.h"
#include "detscore/parallel.h"
#include "detscore/unicode.h"

namespace detscore {

namespace {

bool IsLowercase(std::string_view s) { return unicode::ToLower(s) == s; }

bool IsAsciiLetter(char c) { return c >= 'a' && c <= 'z'; }

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Porter's consonant test: y is a consonant unless it follows a consonant.
bool IsConsonant(std::string_view s, std::size_t i) {
  switch (s[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 || !IsConsonant(s, i - 1);
    default:
      return true;
  }
}

bool ContainsVowel(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!IsConsonant(s, i)) return true;
  }
  return false;
}

// Number of VC sequences in [C](VC)^m[V].
int Measure(std::string_view s) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n && IsConsonant(s, i)) ++i;
  while (i < n) {
    while (i < n && !IsConsonant(s, i)) ++i;
    if (i == n) break;
    while (i < n && IsConsonant(s, i)) ++i;
    ++m;
  }
  return m;
}

bool EndsCvc(std::string_view s) {
  const std::size_t n = s.size();
  if (n < 3) return false;
  const char last = s[n - 1];
  return IsConsonant(s, n - 3) && !IsConsonant(s, n - 2) &&
         IsConsonant(s, n - 1) && last != 'w' && last != 'x' && last != 'y';
}

bool EndsDoubleConsonant(std::string_view s) {
  const std::size_t n = s.size();
  return n >= 2 && s[n - 1] == s[n - 2] && IsAsciiLetter(s[n - 1]) &&
         IsConsonant(s, n - 1);
}

// A stem left by removing -ing/-ed must be long enough, end in a letter, and
// contain a vowel ("bring" and "need" stay intact).
bool UsableStem(std::string_view stem) {
  return stem.size() >= 3 && IsAsciiLetter(stem.back()) && ContainsVowel(stem);
}

std::string RepairStem(std::string_view stem) {
  std::string out(stem);
  const std::size_t n = out.size();
  if ((EndsWith(out, "at") && IsConsonant(out, n - 3)) || EndsWith(out, "bl") ||
      EndsWith(out, "iz")) {
    out.push_back('e');
  } else if (EndsDoubleConsonant(out) && out.back() != 'l' &&
             out.back() != 's' && out.back() != 'z') {
    out.pop_back();
  } else if (Measure(out) == 1 && EndsCvc(out)) {
    out.push_back('e');
  }
  return out;
}

using SuffixRule = std::optional<std::string> (*)(std::string_view);

std::optional<std::string> RuleIes(std::string_view w) {
  if (w.size() < 5 || !EndsWith(w, "ies")) return std::nullopt;
  return std::string(w.substr(0, w.size() - 3)) + "y";
}

std::optional<std::string> RuleSses(std::string_view w) {
  if (!EndsWith(w, "sses")) return std::nullopt;
  return std::string(w.substr(0, w.size() - 2));
}

// -es drops entirely after sibilants (boxes, approaches), otherwise only the
// s goes (nitrates, doses).
std::optional<std::string> RuleEs(std::string_view w) {
  if (w.size() < 4 || !EndsWith(w, "es")) return std::nullopt;
  std::string_view stem = w.substr(0, w.size() - 2);
  if (!IsAsciiLetter(stem.back())) return std::nullopt;
  if (EndsWith(stem, "x") || EndsWith(stem, "ch") || EndsWith(stem, "sh") ||
      EndsWith(stem, "zz")) {
    return std::string(stem);
  }
  return std::string(w.substr(0, w.size() - 1));
}

std::optional<std::string> RuleS(std::string_view w) {
  if (w.size() < 4 || !EndsWith(w, "s")) return std::nullopt;
  if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) {
    return std::nullopt;
  }
  if (!IsAsciiLetter(w[w.size() - 2])) return std::nullopt;
  return std::string(w.substr(0, w.size() - 1));
}

std::optional<std::string> RuleIng(std::string_view w) {
  if (!EndsWith(w, "ing")) return std::nullopt;
  std::string_view stem = w.substr(0, w.size() - 3);
  if (!UsableStem(stem)) return std::nullopt;
  return RepairStem(stem);
}

std::optional<std::string> RuleEd(std::string_view w) {
  if (!EndsWith(w, "ed")) return std::nullopt;
  std::string_view stem = w.substr(0, w.size() - 2);
  if (!UsableStem(stem)) return std::nullopt;
  if (stem.back() == 'i') {
    return std::string(stem.substr(0, stem.size() - 1)) + "y";
  }
  return RepairStem(stem);
}

constexpr std::array<SuffixRule, 6> kSuffixRules = {
    RuleIes, RuleSses, RuleEs, RuleS, RuleIng, RuleEd,
};

template <typename LineFn>
void ForEachDataLine(std::string_view text, LineFn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

}  // namespace

NormalizationConfig::NormalizationConfig(StopwordSet stopwords,
                                         LemmaTable lemma_table,
                                         bool suffix_rules_enabled,
                                         std::size_t min_token_length)
    : stopwords_(std::move(stopwords)),
      lemma_table_(std::move(lemma_table)),
      suffix_rules_enabled_(suffix_rules_enabled),
      min_token_length_(min_token_length) {
  for (const auto& w : stopwords_) {
    if (!IsLowercase(w)) {
      ThrowValidation(fmt::format("stopword '{}' is not lowercase", w));
    }
  }
  for (const auto& [surface, lemma] : lemma_table_) {
    if (!IsLowercase(surface) || !IsLowercase(lemma)) {
      ThrowValidation(fmt::format("lemma entry '{}' -> '{}' is not lowercase",
                                  surface, lemma));
    }
    const auto tokens = Tokenize(lemma);
    if (tokens.size() != 1 || tokens.front() != lemma) {
      ThrowValidation(fmt::format(
          "lemma '{}' is not a single token of its own", lemma));
    }
    auto it = lemma_table_.find(lemma);
    if (it != lemma_table_.end() && it->second != lemma) {
      ThrowValidation(fmt::format(
          "lemma '{}' (for '{}') is not a fixed point: it maps to '{}'", lemma,
          surface, it->second));
    }
    lemma_values_.insert(lemma);
  }
}

NormalizationConfig NormalizationConfig::Default() {
  static const NormalizationConfig config(
      ParseStopwords(embedded_stopwords()),
      ParseLemmaTable(embedded_lemma_table(), "<embedded lemma table>"));
  return config;
}

std::optional<std::string> NormalizationConfig::LookupLemma(
    const std::string& token) const {
  if (auto it = lemma_table_.find(token); it != lemma_table_.end()) {
    return it->second;
  }
  if (lemma_values_.find(token) != lemma_values_.end()) return token;
  return std::nullopt;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n) {
      const auto d = unicode::DecodeAt(text, i);
      if (!unicode::IsSpace(d.code_point)) break;
      i += d.length;
    }
    const std::size_t begin = i;
    std::size_t end = i;
    std::size_t first_alnum = std::string_view::npos;
    std::size_t last_alnum_end = 0;
    while (end < n) {
      const auto d = unicode::DecodeAt(text, end);
      if (unicode::IsSpace(d.code_point)) break;
      if (unicode::IsAlnum(d.code_point)) {
        if (first_alnum == std::string_view::npos) first_alnum = end;
        last_alnum_end = end + d.length;
      }
      end += d.length;
    }
    if (first_alnum != std::string_view::npos) {
      tokens.emplace_back(text.substr(first_alnum, last_alnum_end - first_alnum));
    }
    if (end == begin) break;
    i = end;
  }
  return tokens;
}

std::string LemmatizeStep(std::string_view token,
                          const NormalizationConfig& config) {
  std::string word(token);
  if (auto lemma = config.LookupLemma(word)) return *lemma;
  if (!config.suffix_rules_enabled()) return word;
  for (SuffixRule rule : kSuffixRules) {
    if (auto out = rule(word)) return *out;
  }
  return word;
}

std::string Lemmatize(std::string_view token,
                      const NormalizationConfig& config) {
  std::string current(token);
  // Every suffix rule strictly shortens the word and table lemmas are fixed
  // points, so this terminates.
  while (true) {
    std::string next = LemmatizeStep(current, config);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::optional<std::string> NormalizeToken(std::string_view raw_token,
                                          const NormalizationConfig& config) {
  std::string lower = unicode::ToLower(raw_token);
  if (lower.empty() ||
      unicode::CodePointCount(lower) < config.min_token_length() ||
      config.IsStopword(lower)) {
    return std::nullopt;
  }
  std::string lemma = Lemmatize(lower, config);
  if (lemma.empty() ||
      unicode::CodePointCount(lemma) < config.min_token_length() ||
      config.IsStopword(lemma)) {
    return std::nullopt;
  }
  return lemma;
}

TokenizedDocument NormalizeDocument(const RawDocument& raw,
                                    const NormalizationConfig& config) {
  TokenizedDocument doc;
  doc.id = raw.id;
  for (const auto& token : Tokenize(raw.text)) {
    if (auto term = NormalizeToken(token, config)) doc.Add(*term);
  }
  return doc;
}

std::vector<TokenizedDocument> NormalizeDocuments(
    std::span<const RawDocument> raw, const NormalizationConfig& config,
    int threads) {
  std::vector<TokenizedDocument> out(raw.size());
  ParallelFor(raw.size(), threads, [&](std::size_t i) {
    out[i] = NormalizeDocument(raw[i], config);
  });
  return out;
}

namespace serial {

std::vector<TokenizedDocument> NormalizeDocuments(
    std::span<const RawDocument> raw, const NormalizationConfig& config) {
  std::vector<TokenizedDocument> out;
  out.reserve(raw.size());
  for (const auto& doc : raw) out.push_back(NormalizeDocument(doc, config));
  return out;
}

}  // namespace serial

StopwordSet ParseStopwords(std::string_view text) {
  StopwordSet words;
  ForEachDataLine(text, [&](std::string_view line, std::size_t) {
    words.insert(unicode::ToLower(line));
  });
  return words;
}

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  if (!unicode::IsValidUtf8(text)) {
    throw Error(ErrorKind::kEncoding,
                fmt::format("stopword file {} is not valid UTF-8", path.string()));
  }
  return ParseStopwords(text);
}

LemmaTable ParseLemmaTable(std::string_view text, std::string_view source) {
  LemmaTable table;
  ForEachDataLine(text, [&](std::string_view line, std::size_t line_no) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != line.npos) {
      ThrowValidation(fmt::format("{}:{}: expected 'surface<TAB>lemma'",
                                  source, line_no));
    }
    std::string surface = unicode::ToLower(line.substr(0, tab));
    std::string lemma = unicode::ToLower(line.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      ThrowValidation(fmt::format("{}:{}: empty field", source, line_no));
    }
    auto [it, inserted] = table.emplace(surface, lemma);
    if (!inserted && it->second != lemma) {
      ThrowValidation(fmt::format("{}:{}: '{}' already maps to '{}'", source,
                                  line_no, surface, it->second));
    }
  });
  return table;
}

LemmaTable LoadLemmaTable(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  if (!unicode::IsValidUtf8(text)) {
    throw Error(ErrorKind::kEncoding,
                fmt::format("lemma table {} is not valid UTF-8", path.string()));
  }
  return ParseLemmaTable(text, path.string());
}

}  // namespace detscore
