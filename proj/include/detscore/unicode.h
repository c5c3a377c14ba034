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

// Minimal UTF-8 utilities: validation, decoding, and the character classes
// the tokenizer needs. No locale is consulted, so results are identical on
// every platform.

#ifndef DETSCORE_UNICODE_H_
#define DETSCORE_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace detscore::unicode {

// Returns the byte offset of the first invalid sequence, or nullopt when the
// whole input is well-formed UTF-8 (no overlongs, no surrogates, <= U+10FFFF).
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

inline bool IsValidUtf8(std::string_view text) {
  return !FindInvalidUtf8(text).has_value();
}

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed, >= 1
};

// Decodes the code point starting at `pos`. A malformed or truncated
// sequence decodes as U+FFFD with length 1.
Decoded DecodeAt(std::string_view text, std::size_t pos);

// Byte length of the code point that ends at `end` (exclusive).
std::size_t LengthBefore(std::string_view text, std::size_t end);

void AppendUtf8(char32_t cp, std::string& out);

// Unicode White_Space property.
bool IsSpace(char32_t cp);

// ASCII letters and digits, plus every non-ASCII code point outside the
// punctuation, symbol, and separator blocks. Greek and other scripts count as
// alphanumeric, so "ω-3" survives boundary trimming intact.
bool IsAlnum(char32_t cp);

// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin Extended-A,
// Greek, and Cyrillic. Other code points map to themselves.
char32_t ToLower(char32_t cp);

std::string ToLower(std::string_view text);

std::size_t CodePointCount(std::string_view text);

}  // namespace detscore::unicode

#endif  // DETSCORE_UNICODE_H_
