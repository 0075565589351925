// Copyright 2026 The Abugida Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace abugida {

// A word is a sequence of Unicode scalar values.
using Word = std::u32string;
using WordView = std::u32string_view;

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per offending
// lead byte, so decoding never fails.
Word utf8_decode(std::string_view bytes);

std::string utf8_encode(WordView word);
void utf8_append(std::string& out, char32_t cp);

bool is_whitespace(char32_t cp);

// "U+09CD" / "u+9cd" -> 0x09CD. Returns nullopt on anything else.
std::optional<char32_t> parse_hex_codepoint(std::string_view token);

// 0x09CD -> "U+09CD"
std::string format_codepoint(char32_t cp);

// "[U+0995, U+09CD, U+09B7]"
std::string format_codepoints(WordView word);

}  // namespace abugida
