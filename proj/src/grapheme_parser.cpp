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

#include "abugida/grapheme_parser.hpp"

namespace abugida {
namespace {

using C = CodepointClass;

[[noreturn]] void not_normalized(std::size_t pos, WordView word, const char* why) {
  throw ParseError(ParseError::Kind::NotNormalized, pos,
                   std::string("not normalized at ") + std::to_string(pos) + " (" + why +
                       "): " + format_codepoints(word));
}

}  // namespace

void Grapheme::append_to(Word& out) const {
  out.append(root);
  if (vowel_diacritic) out.push_back(*vowel_diacritic);
  out.append(consonant_diacritics);
}

Word Grapheme::serialize() const {
  Word out;
  append_to(out);
  return out;
}

std::vector<std::size_t> connector_positions(const ScriptSpec& spec, WordView word) {
  std::vector<std::size_t> out;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.classify(word[i]) != C::Connector) continue;
    if (i == 0 || i + 1 >= n || !spec.is(word[i - 1], C::Consonant) ||
        !spec.is(word[i + 1], C::Consonant)) {
      not_normalized(i, word, "connector without consonant neighbors");
    }
    out.push_back(i);
  }
  return out;
}

std::vector<Span> merge_connector_spans(const std::vector<std::size_t>& connectors) {
  std::vector<Span> spans;
  for (std::size_t i : connectors) {
    // Triplets (i-1, i, i+1) and (j-1, j, j+1) merge iff i + 1 == j - 1.
    if (!spans.empty() && spans.back().last == i - 1) {
      spans.back().last = i + 1;
    } else {
      spans.push_back({i - 1, i + 1});
    }
  }
  return spans;
}

std::vector<Unit> segment_units(const ScriptSpec& spec, WordView word,
                                const std::vector<Span>& spans) {
  std::vector<Unit> units;
  units.reserve(word.size());
  std::size_t next_span = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    if (next_span < spans.size() && spans[next_span].first == i) {
      units.push_back({UnitKind::Root, i, spans[next_span].last + 1});
      i = spans[next_span].last + 1;
      ++next_span;
      continue;
    }
    UnitKind kind;
    switch (spec.classify(word[i])) {
      case C::Vowel:
      case C::Consonant: kind = UnitKind::Root; break;
      case C::VowelDiacritic: kind = UnitKind::VowelDiacritic; break;
      case C::ConsonantDiacritic: kind = UnitKind::ConsonantDiacritic; break;
      case C::Digit:
      case C::Symbol:
      case C::Legacy: kind = UnitKind::Other; break;
      case C::Connector: not_normalized(i, word, "connector outside a conjunct");
      case C::Nukta: not_normalized(i, word, "decomposed nukta");
      case C::Foreign:
      default: not_normalized(i, word, "foreign codepoint");
    }
    units.push_back({kind, i, i + 1});
    ++i;
  }
  return units;
}

std::vector<Grapheme> assemble_graphemes(WordView word, const std::vector<Unit>& units) {
  std::vector<Grapheme> out;
  out.reserve(units.size());
  for (const Unit& u : units) {
    switch (u.kind) {
      case UnitKind::Root:
      case UnitKind::Other: {
        Grapheme g;
        g.root.assign(word.substr(u.begin, u.end - u.begin));
        g.other = u.kind == UnitKind::Other;
        out.push_back(std::move(g));
        break;
      }
      case UnitKind::VowelDiacritic:
      case UnitKind::ConsonantDiacritic: {
        if (out.empty() || out.back().other) {
          throw ParseError(ParseError::Kind::DanglingDiacritic, u.begin,
                           "diacritic without a root at " + std::to_string(u.begin));
        }
        Grapheme& g = out.back();
        if (u.kind == UnitKind::ConsonantDiacritic) {
          g.consonant_diacritics.push_back(word[u.begin]);
        } else if (g.vowel_diacritic || !g.consonant_diacritics.empty()) {
          not_normalized(u.begin, word, "second vowel sign or vowel sign after consonant sign");
        } else {
          g.vowel_diacritic = word[u.begin];
        }
        break;
      }
    }
  }
  return out;
}

ParseResult parse_word(const ScriptSpec& spec, WordView word) {
  auto connectors = connector_positions(spec, word);
  auto spans = merge_connector_spans(connectors);
  auto units = segment_units(spec, word, spans);
  auto graphemes = assemble_graphemes(word, units);
  // Vowel roots take consonant signs only.
  std::size_t pos = 0;
  for (const Grapheme& g : graphemes) {
    if (g.vowel_diacritic && spec.is(g.root.front(), C::Vowel)) {
      not_normalized(pos + g.root.size(), word, "vowel sign after a vowel");
    }
    pos += g.root.size() + (g.vowel_diacritic ? 1 : 0) + g.consonant_diacritics.size();
  }
  return {std::move(graphemes), Word(word)};
}

Word reconstruct(const ParseResult& result) {
  Word out;
  out.reserve(result.source.size());
  for (const auto& g : result.graphemes) g.append_to(out);
  return out;
}

}  // namespace abugida
