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

// Error injection for robustness testing.
//
// One protocol pass runs four injections in order, each firing independently
// with its own probability:
//   1. insert the connector or a non-glyph (U+200B, U+200C, 'a') at a
//      uniformly chosen position
//   2. split one precomposed nukta letter into (base, nukta)
//   3. split one composed vowel sign into its two-sign form
//   4. insert a random vowel sign right after a random vowel
// `intensity` passes are applied per word. Everything is driven by a
// counter-based RNG keyed on the seed, so output depends only on
// (spec, word, config).
//
// Strict mode restricts injection 1 to sites the normalizer is guaranteed
// to repair: never a connector between two consonants, never right before a
// nukta, never right after a nukta or a Bangla [ta, connector].

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "abugida/script_spec.hpp"
#include "abugida/unicode.hpp"

namespace abugida {

enum class InjectionKind : std::uint8_t {
  ConnectorOrNonGlyph,
  BreakNukta,
  BreakDiacritic,
  VowelDiacriticAfterVowel,
};

inline constexpr std::size_t kInjectionKinds = 4;
std::string_view injection_label(InjectionKind kind);

// Codepoints injection 1 draws from, besides the script connector.
inline constexpr std::array<char32_t, 3> kNonGlyphPool = {0x200B, 0x200C, 0x0061};

struct AttackConfig {
  double p_connector_nonglyph = 0.3;
  double p_break_nukta = 0.5;
  double p_break_diacritic = 0.5;
  double p_vowel_vd = 0.5;
  int intensity = 1;
  std::uint64_t seed = 0;
  bool strict = false;

  double probability(InjectionKind kind) const;
  // Throws std::invalid_argument.
  void validate() const;
};

// Per-kind counters. `eligible` counts passes in which the injection had at
// least one applicable site; `fired` counts passes in which it was applied.
struct AttackTrace {
  std::array<std::size_t, kInjectionKinds> eligible{};
  std::array<std::size_t, kInjectionKinds> fired{};
  std::size_t passes = 0;

  void merge(const AttackTrace& other);
  double fire_rate(InjectionKind kind) const;
};

// Word `word` attacked with RNG key `cfg.seed`.
Word attack_word(const ScriptSpec& spec, WordView word, const AttackConfig& cfg,
                 AttackTrace* trace = nullptr);

// Word i is attacked with key derive_seed(cfg.seed, i).
std::vector<Word> attack_corpus(const ScriptSpec& spec, const std::vector<Word>& words,
                                const AttackConfig& cfg, AttackTrace* trace = nullptr);

// Exposed for tests: may `cp` be inserted before index `pos` in strict mode?
bool strict_insertion_allowed(const ScriptSpec& spec, WordView word, std::size_t pos, char32_t cp);

}  // namespace abugida
