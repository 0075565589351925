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

// Orthographic-syllable segmentation.
//
// A normalized word is cut into graphemes in four steps:
//   1. connector_positions: indices of connectors sitting between consonants
//   2. merge_connector_spans: each connector i claims (i-1, i, i+1); spans
//      sharing an endpoint merge, giving odd-length runs >= 3
//   3. segment_units: spans collapse into one root unit, everything else is
//      a single-codepoint unit tagged by class
//   4. assemble_graphemes: a root opens a grapheme, following diacritic
//      units attach to it
// Each step is linear in the word length.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abugida/script_spec.hpp"
#include "abugida/unicode.hpp"

namespace abugida {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { NotNormalized, DanglingDiacritic };
  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}
  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct Grapheme {
  Word root;  // vowel, consonant or connector-joined conjunct; the symbol itself when `other`
  std::optional<char32_t> vowel_diacritic;
  Word consonant_diacritics;
  bool other = false;  // digit / symbol / legacy singleton

  // root ++ vowel_diacritic ++ consonant_diacritics
  Word serialize() const;
  void append_to(Word& out) const;

  bool operator==(const Grapheme&) const = default;
};

struct ParseResult {
  std::vector<Grapheme> graphemes;
  Word source;
};

// Inclusive index range [first, last] into the word.
struct Span {
  std::size_t first;
  std::size_t last;

  std::size_t size() const noexcept { return last - first + 1; }
  bool operator==(const Span&) const = default;
};

enum class UnitKind { Root, VowelDiacritic, ConsonantDiacritic, Other };

struct Unit {
  UnitKind kind;
  std::size_t begin;  // half-open [begin, end) into the word
  std::size_t end;

  bool operator==(const Unit&) const = default;
};

std::vector<std::size_t> connector_positions(const ScriptSpec& spec, WordView word);
std::vector<Span> merge_connector_spans(const std::vector<std::size_t>& connectors);
std::vector<Unit> segment_units(const ScriptSpec& spec, WordView word,
                                const std::vector<Span>& spans);
std::vector<Grapheme> assemble_graphemes(WordView word, const std::vector<Unit>& units);

// Throws ParseError on input that is not normalized.
ParseResult parse_word(const ScriptSpec& spec, WordView word);

Word reconstruct(const ParseResult& result);

}  // namespace abugida
