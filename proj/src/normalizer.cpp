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

#include "abugida/normalizer.hpp"

#include <algorithm>
#include <array>

namespace abugida {
namespace {

using C = CodepointClass;

// Left-to-right rewrite buffer. While a rule runs, the word's current state
// is `out + input[i:]`, so an edit recorded at out.size() is a valid splice
// position for replay.
class Rewriter {
 public:
  Rewriter(std::size_t size_hint, NormalizationReport* report) : report_(report) {
    out.reserve(size_hint);
  }

  void keep(char32_t cp) { out.push_back(cp); }

  // Drops input codepoints that have not been emitted.
  void drop(FixKind kind, WordView removed) {
    if (report_) report_->entries.push_back({kind, out.size(), Word(removed), Word()});
  }

  // Replaces the last `tail` emitted codepoints followed by the `consumed`
  // input codepoints with `inserted`.
  void splice(FixKind kind, std::size_t tail, WordView consumed, WordView inserted) {
    const std::size_t pos = out.size() - tail;
    if (report_) {
      Word removed = out.substr(pos);
      removed.append(consumed);
      report_->entries.push_back({kind, pos, std::move(removed), Word(inserted)});
    }
    out.resize(pos);
    out.append(inserted);
  }

  void flag(FixKind kind, char32_t cp) {
    if (report_) report_->flagged.push_back({kind, out.size(), Word(1, cp), Word(1, cp)});
  }

  bool back_is(const ScriptSpec& spec, C cls) const {
    return !out.empty() && spec.classify(out.back()) == cls;
  }

  Word out;

 private:
  NormalizationReport* report_;
};

WordView one(const char32_t& cp) { return WordView(&cp, 1); }

bool is_diacritic_killer(C cls) {
  return cls == C::Digit || cls == C::Symbol || cls == C::Legacy;
}

void check_word(WordView word) {
  if (word.empty()) throw NormalizeError(NormalizeError::Kind::NotAWord, "empty word");
  for (char32_t cp : word) {
    if (is_whitespace(cp)) {
      throw NormalizeError(NormalizeError::Kind::NotAWord,
                           "word contains whitespace " + format_codepoint(cp));
    }
  }
}

}  // namespace

std::string_view fix_label(FixKind kind) {
  switch (kind) {
    case FixKind::Legacy: return "LEGACY";
    case FixKind::BrokenDiacritic: return "BD";
    case FixKind::BrokenNukta: return "BN";
    case FixKind::InvalidUnicode: return "IU";
    case FixKind::InvalidConnector: return "IC";
    case FixKind::DiacriticForm: return "FD";
    case FixKind::VowelVowelDiacritic: return "VDV";
    case FixKind::UnwantedDouble: return "UD";
    case FixKind::ComplexRoot: return "CRN";
    case FixKind::AssameseReplacement: return "AR";
    case FixKind::ToHosonto: return "THN";
  }
  return "?";
}

std::optional<FixKind> fix_from_label(std::string_view label) {
  for (int k = 0; k < kFixKindCount; ++k) {
    auto kind = static_cast<FixKind>(k);
    if (fix_label(kind) == label) return kind;
  }
  return std::nullopt;
}

bool NormalizationReport::contains(FixKind kind) const {
  return std::any_of(entries.begin(), entries.end(),
                     [kind](const ReportEntry& e) { return e.fix == kind; });
}

Word replay_report(WordView input, const NormalizationReport& report) {
  Word state(input);
  for (const auto& e : report.entries) {
    state.replace(e.position, e.removed.size(), e.inserted);
  }
  return state;
}

Word fix_legacy(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    if (spec.classify(cp) != C::Legacy) {
      rw.keep(cp);
    } else if (auto to = spec.legacy_replacement(cp)) {
      rw.splice(FixKind::Legacy, 0, one(cp), one(*to));
    } else {
      rw.flag(FixKind::Legacy, cp);
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word replace_assamese(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    if (auto to = spec.assamese_replacement(cp)) {
      rw.splice(FixKind::AssameseReplacement, 0, one(cp), one(*to));
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word fix_broken_diacritics(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    // Composing into the buffer tail lets a result compose again with the
    // next sign, so one scan reaches the no-key-matches state.
    std::optional<char32_t> composed;
    if (!rw.out.empty()) composed = spec.compose_diacritics(rw.out.back(), cp);
    if (composed) {
      rw.splice(FixKind::BrokenDiacritic, 1, one(cp), one(*composed));
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word fix_nukta(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    if (spec.classify(cp) != C::Nukta) {
      rw.keep(cp);
      continue;
    }
    std::optional<char32_t> composed;
    if (!rw.out.empty() && spec.nukta() == cp) composed = spec.compose_nukta(rw.out.back());
    if (composed) {
      rw.splice(FixKind::BrokenNukta, 1, one(cp), one(*composed));
    } else {
      rw.drop(FixKind::BrokenNukta, one(cp));  // orphan nukta
    }
  }
  return std::move(rw.out);
}

Word normalize_khanda_ta(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  auto kt = spec.khanda_ta();
  if (!kt) return Word(word);
  const char32_t connector = spec.connector();
  Rewriter rw(word.size(), report);
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] == kt->base && i + 1 < word.size() && word[i + 1] == connector) {
      // [ta, connector, joiner-control] always; [ta, connector] unless a
      // consonant follows (then it is a real conjunct).
      if (i + 2 < word.size() && spec.is_rule_referenced(word[i + 2])) {
        rw.splice(FixKind::ToHosonto, 0, word.substr(i, 3), one(kt->composed));
        i += 3;
        continue;
      }
      if (i + 2 == word.size() || spec.classify(word[i + 2]) != C::Consonant) {
        rw.splice(FixKind::ToHosonto, 0, word.substr(i, 2), one(kt->composed));
        i += 2;
        continue;
      }
    }
    rw.keep(word[i]);
    ++i;
  }
  return std::move(rw.out);
}

Word remove_invalid_unicode(const ScriptSpec& spec, WordView word, NormalizationReport* report,
                            bool keep_rule_referenced) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    if (spec.classify(cp) == C::Foreign && !(keep_rule_referenced && spec.is_rule_referenced(cp))) {
      rw.drop(FixKind::InvalidUnicode, one(cp));
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word dedup_unwanted_doubles(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    const C cls = spec.classify(cp);
    const bool collapsible = cls == C::Connector || cls == C::VowelDiacritic;
    if (collapsible && !rw.out.empty() && rw.out.back() == cp) {
      rw.drop(FixKind::UnwantedDouble, one(cp));
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word fix_invalid_connectors(const ScriptSpec& spec, WordView word, NormalizationReport* report,
                            bool defer_khanda_ta) {
  auto kt = spec.khanda_ta();
  Rewriter rw(word.size(), report);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char32_t cp = word[i];
    if (spec.classify(cp) != C::Connector) {
      rw.keep(cp);
      continue;
    }
    // Neighbors are judged against the already-cleaned prefix, so in a run
    // of connectors only the last one can survive.
    const bool prev_consonant = rw.back_is(spec, C::Consonant);
    const bool next_consonant = i + 1 < word.size() && spec.is(word[i + 1], C::Consonant);
    const bool deferred = defer_khanda_ta && kt && i + 1 == word.size() && !rw.out.empty() &&
                          rw.out.back() == kt->base;
    if ((prev_consonant && next_consonant) || deferred) {
      rw.keep(cp);
    } else {
      rw.drop(FixKind::InvalidConnector, one(cp));
    }
  }
  return std::move(rw.out);
}

Word normalize_complex_roots(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  if (!spec.has_conjunct_whitelist()) return Word(word);
  const char32_t connector = spec.connector();
  Rewriter rw(word.size(), report);
  Word run;
  std::size_t i = 0;
  while (i < word.size()) {
    if (!spec.is(word[i], C::Consonant)) {
      rw.keep(word[i]);
      ++i;
      continue;
    }
    // Maximal connector-joined consonant run starting at i.
    run.assign(1, word[i]);
    std::size_t j = i;
    while (j + 2 < word.size() && word[j + 1] == connector && spec.is(word[j + 2], C::Consonant)) {
      run.push_back(word[j + 2]);
      j += 2;
    }
    i = j + 1;

    std::size_t s = 0;
    while (s < run.size()) {
      std::size_t len = std::min(spec.max_conjunct_length(), run.size() - s);
      while (len >= 2 && !spec.is_whitelisted(WordView(run).substr(s, len))) --len;
      if (len < 2) len = 1;
      rw.keep(run[s]);
      for (std::size_t t = 1; t < len; ++t) {
        rw.keep(connector);
        rw.keep(run[s + t]);
      }
      s += len;
      if (s < run.size()) rw.drop(FixKind::ComplexRoot, one(connector));
    }
  }
  return std::move(rw.out);
}

Word fix_diacritic_forms(const ScriptSpec& spec, WordView word, NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    const C cls = spec.classify(cp);
    if (!is_diacritic(cls)) {
      rw.keep(cp);
      continue;
    }
    // (c) no host: word start, digit, symbol or legacy sign.
    if (rw.out.empty() || is_diacritic_killer(spec.classify(rw.out.back()))) {
      rw.drop(FixKind::DiacriticForm, one(cp));
      continue;
    }
    if (cls == C::ConsonantDiacritic) {
      rw.keep(cp);
      continue;
    }
    std::size_t trailing_cd = 0;
    while (trailing_cd < rw.out.size() &&
           spec.is(rw.out[rw.out.size() - 1 - trailing_cd], C::ConsonantDiacritic)) {
      ++trailing_cd;
    }
    const std::size_t host = rw.out.size() - trailing_cd;
    if (host == 0) {
      rw.drop(FixKind::DiacriticForm, one(cp));
    } else if (spec.is(rw.out[host - 1], C::VowelDiacritic)) {
      // (a) keep the first vowel sign. A composable pair is left intact for
      // fix_broken_diacritics on the next pass.
      if (trailing_cd == 0 && spec.compose_diacritics(rw.out.back(), cp)) {
        rw.keep(cp);
      } else {
        rw.drop(FixKind::DiacriticForm, one(cp));
      }
    } else if (trailing_cd > 0) {
      // (b) vowel sign moves in front of the consonant signs.
      Word moved(1, cp);
      moved.append(rw.out, host, trailing_cd);
      rw.splice(FixKind::DiacriticForm, trailing_cd, one(cp), moved);
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

Word remove_vowel_vowel_diacritic(const ScriptSpec& spec, WordView word,
                                  NormalizationReport* report) {
  Rewriter rw(word.size(), report);
  for (char32_t cp : word) {
    if (spec.is(cp, C::VowelDiacritic) && rw.back_is(spec, C::Vowel)) {
      rw.drop(FixKind::VowelVowelDiacritic, one(cp));
    } else {
      rw.keep(cp);
    }
  }
  return std::move(rw.out);
}

NormalizerOptions resolve_options(const ScriptSpec& spec, NormalizerOptions options) {
  const bool is_bangla = spec.script_code() == "bn";
  if (!options.bangla_extensions) options.bangla_extensions = is_bangla;
  if (*options.bangla_extensions && !is_bangla) {
    throw NormalizeError(NormalizeError::Kind::InvalidOptions,
                         "bangla_extensions requires script bn, got " + spec.script_code());
  }
  if (options.max_passes < 1) {
    throw NormalizeError(NormalizeError::Kind::InvalidOptions, "max_passes must be positive");
  }
  return options;
}

// Termination: every rule either shortens the word (BD, BN, THN, IU, UD, IC,
// CRN, FD drops, VDV) or keeps its length while strictly reducing the number
// of illegal patterns (Legacy and AR replace mapped signs with unmapped ones;
// an FD reorder removes a consonant-sign/vowel-sign inversion). The pass
// limit only trips if a spec's tables make two rules undo each other.
NormalizeResult normalize_word(const ScriptSpec& spec, WordView word,
                               const NormalizerOptions& raw_options) {
  check_word(word);
  const NormalizerOptions options = resolve_options(spec, raw_options);
  const bool bangla = *options.bangla_extensions;

  NormalizeResult result;
  NormalizationReport* report = &result.report;
  Word cur(word);
  std::size_t first_pass_flags = 0;
  for (int pass = 0; pass < options.max_passes; ++pass) {
    Word before = cur;
    if (options.map_legacy) cur = fix_legacy(spec, cur, report);
    if (bangla) cur = replace_assamese(spec, cur, report);
    cur = fix_broken_diacritics(spec, cur, report);
    cur = fix_nukta(spec, cur, report);
    if (bangla) cur = normalize_khanda_ta(spec, cur, report);
    cur = remove_invalid_unicode(spec, cur, report);
    if (bangla) cur = dedup_unwanted_doubles(spec, cur, report);
    cur = fix_invalid_connectors(spec, cur, report);
    if (bangla) cur = normalize_complex_roots(spec, cur, report);
    cur = fix_diacritic_forms(spec, cur, report);
    cur = remove_vowel_vowel_diacritic(spec, cur, report);
    if (pass == 0) first_pass_flags = report->flagged.size();
    if (cur == before) {
      report->flagged.resize(first_pass_flags);
      result.word = std::move(cur);
      return result;
    }
  }
  throw NormalizeError(NormalizeError::Kind::PassLimitExceeded,
                       "no fixpoint within " + std::to_string(options.max_passes) +
                           " passes for " + format_codepoints(word));
}

}  // namespace abugida
