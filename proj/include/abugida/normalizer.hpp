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

// Word-level Unicode normalization for Abugida scripts.
//
// Each fix_* function is one rewrite rule. Rules scan left to right and may
// append what they changed to a NormalizationReport. normalize_word() chains
// them in a fixed order and iterates to a fixpoint.
//
// Report positions index the word as it was just before that entry was
// applied, so entries replay as sequential splices (see replay_report()).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abugida/script_spec.hpp"
#include "abugida/unicode.hpp"

namespace abugida {

enum class FixKind : std::uint8_t {
  Legacy,
  BrokenDiacritic,
  BrokenNukta,
  InvalidUnicode,
  InvalidConnector,
  DiacriticForm,
  VowelVowelDiacritic,
  UnwantedDouble,
  ComplexRoot,
  AssameseReplacement,
  ToHosonto,
};

inline constexpr int kFixKindCount = 11;

// Short labels: LEGACY, BD, BN, IU, IC, FD, VDV, UD, CRN, AR, THN.
std::string_view fix_label(FixKind kind);
std::optional<FixKind> fix_from_label(std::string_view label);

struct ReportEntry {
  FixKind fix;
  std::size_t position;
  Word removed;
  Word inserted;

  bool operator==(const ReportEntry&) const = default;
};

struct NormalizationReport {
  std::vector<ReportEntry> entries;
  // Codepoints a rule noticed but left alone (unmapped legacy signs).
  std::vector<ReportEntry> flagged;

  bool empty() const noexcept { return entries.empty(); }
  bool contains(FixKind kind) const;
};

// Applies report entries to `input` in order.
Word replay_report(WordView input, const NormalizationReport& report);

struct NormalizerOptions {
  bool map_legacy = false;
  // nullopt means "on for bn, off elsewhere".
  std::optional<bool> bangla_extensions;
  int max_passes = 8;
};

class NormalizeError : public std::runtime_error {
 public:
  enum class Kind { NotAWord, PassLimitExceeded, InvalidOptions };
  NormalizeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct NormalizeResult {
  Word word;
  NormalizationReport report;
};

// Individual rules. `report` may be null.
Word fix_legacy(const ScriptSpec& spec, WordView word, NormalizationReport* report = nullptr);
Word fix_broken_diacritics(const ScriptSpec& spec, WordView word,
                           NormalizationReport* report = nullptr);
Word fix_nukta(const ScriptSpec& spec, WordView word, NormalizationReport* report = nullptr);
Word remove_invalid_unicode(const ScriptSpec& spec, WordView word,
                            NormalizationReport* report = nullptr,
                            bool keep_rule_referenced = false);
// With `defer_khanda_ta`, a word-final [ত, connector] is left for
// normalize_khanda_ta().
Word fix_invalid_connectors(const ScriptSpec& spec, WordView word,
                            NormalizationReport* report = nullptr, bool defer_khanda_ta = false);
Word fix_diacritic_forms(const ScriptSpec& spec, WordView word,
                         NormalizationReport* report = nullptr);
Word remove_vowel_vowel_diacritic(const ScriptSpec& spec, WordView word,
                                  NormalizationReport* report = nullptr);

// Bangla extensions.
Word dedup_unwanted_doubles(const ScriptSpec& spec, WordView word,
                            NormalizationReport* report = nullptr);
Word normalize_complex_roots(const ScriptSpec& spec, WordView word,
                             NormalizationReport* report = nullptr);
Word replace_assamese(const ScriptSpec& spec, WordView word, NormalizationReport* report = nullptr);
Word normalize_khanda_ta(const ScriptSpec& spec, WordView word,
                         NormalizationReport* report = nullptr);

// Full pipeline:
//   Legacy -> AR -> BD -> BN -> THN -> IU -> UD -> IC -> CRN -> FD -> VDV
// repeated until a pass changes nothing. Throws NormalizeError.
NormalizeResult normalize_word(const ScriptSpec& spec, WordView word,
                               const NormalizerOptions& options = {});

// Resolves the bangla_extensions default and checks option invariants.
NormalizerOptions resolve_options(const ScriptSpec& spec, NormalizerOptions options);

}  // namespace abugida
