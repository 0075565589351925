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

#include "abugida/noise_injector.hpp"

#include <string>

#include "abugida/rng.hpp"

namespace abugida {
namespace {

using C = CodepointClass;

std::size_t index_of(InjectionKind kind) { return static_cast<std::size_t>(kind); }

// Picks one element of `sites` uniformly, or returns false when empty.
bool pick(CounterRng& rng, const std::vector<std::size_t>& sites, std::size_t& out) {
  if (sites.empty()) return false;
  out = sites[rng.below(sites.size())];
  return true;
}

class Attacker {
 public:
  Attacker(const ScriptSpec& spec, const AttackConfig& cfg, std::uint64_t key, AttackTrace* trace)
      : spec_(spec), cfg_(cfg), rng_(key), trace_(trace) {}

  Word run(WordView input) {
    Word w(input);
    for (int pass = 0; pass < cfg_.intensity; ++pass) {
      insert_connector_or_nonglyph(w);
      break_nukta(w);
      break_diacritic(w);
      vowel_sign_after_vowel(w);
      if (trace_) ++trace_->passes;
    }
    return w;
  }

 private:
  // Draws the coin first so the RNG stream does not depend on the word.
  bool decide(InjectionKind kind, bool has_site) {
    const bool coin = rng_.bernoulli(cfg_.probability(kind));
    if (trace_ && has_site) {
      ++trace_->eligible[index_of(kind)];
      if (coin) ++trace_->fired[index_of(kind)];
    }
    return coin && has_site;
  }

  void insert_connector_or_nonglyph(Word& w) {
    const std::size_t choice = rng_.below(kNonGlyphPool.size() + 1);
    const char32_t cp = choice == 0 ? spec_.connector() : kNonGlyphPool[choice - 1];
    sites_.clear();
    for (std::size_t p = 0; p <= w.size(); ++p) {
      if (!cfg_.strict || strict_insertion_allowed(spec_, w, p, cp)) sites_.push_back(p);
    }
    if (!decide(InjectionKind::ConnectorOrNonGlyph, !sites_.empty())) return;
    std::size_t p;
    pick(rng_, sites_, p);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), cp);
  }

  void break_nukta(Word& w) {
    sites_.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (spec_.decompose_nukta(w[i])) sites_.push_back(i);
    }
    if (!decide(InjectionKind::BreakNukta, !sites_.empty())) return;
    std::size_t i;
    pick(rng_, sites_, i);
    auto [base, nukta] = *spec_.decompose_nukta(w[i]);
    w[i] = base;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), nukta);
  }

  void break_diacritic(Word& w) {
    sites_.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (spec_.decompose_diacritic(w[i])) sites_.push_back(i);
    }
    if (!decide(InjectionKind::BreakDiacritic, !sites_.empty())) return;
    std::size_t i;
    pick(rng_, sites_, i);
    auto [first, second] = *spec_.decompose_diacritic(w[i]);
    w[i] = first;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), second);
  }

  void vowel_sign_after_vowel(Word& w) {
    const auto& signs = spec_.members(C::VowelDiacritic);
    sites_.clear();
    if (!signs.empty()) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (spec_.is(w[i], C::Vowel)) sites_.push_back(i);
      }
    }
    if (!decide(InjectionKind::VowelDiacriticAfterVowel, !sites_.empty())) return;
    std::size_t i;
    pick(rng_, sites_, i);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), signs[rng_.below(signs.size())]);
  }

  const ScriptSpec& spec_;
  const AttackConfig& cfg_;
  CounterRng rng_;
  AttackTrace* trace_;
  std::vector<std::size_t> sites_;
};

}  // namespace

std::string_view injection_label(InjectionKind kind) {
  switch (kind) {
    case InjectionKind::ConnectorOrNonGlyph: return "connector_or_nonglyph";
    case InjectionKind::BreakNukta: return "break_nukta";
    case InjectionKind::BreakDiacritic: return "break_diacritic";
    case InjectionKind::VowelDiacriticAfterVowel: return "vowel_sign_after_vowel";
  }
  return "?";
}

double AttackConfig::probability(InjectionKind kind) const {
  switch (kind) {
    case InjectionKind::ConnectorOrNonGlyph: return p_connector_nonglyph;
    case InjectionKind::BreakNukta: return p_break_nukta;
    case InjectionKind::BreakDiacritic: return p_break_diacritic;
    case InjectionKind::VowelDiacriticAfterVowel: return p_vowel_vd;
  }
  return 0.0;
}

void AttackConfig::validate() const {
  for (std::size_t k = 0; k < kInjectionKinds; ++k) {
    const double p = probability(static_cast<InjectionKind>(k));
    // Written so NaN fails too.
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string(injection_label(static_cast<InjectionKind>(k))) +
                                  " probability must be in [0, 1]");
    }
  }
  if (intensity < 1) throw std::invalid_argument("intensity must be >= 1");
}

void AttackTrace::merge(const AttackTrace& other) {
  for (std::size_t k = 0; k < kInjectionKinds; ++k) {
    eligible[k] += other.eligible[k];
    fired[k] += other.fired[k];
  }
  passes += other.passes;
}

double AttackTrace::fire_rate(InjectionKind kind) const {
  const auto k = index_of(kind);
  return eligible[k] == 0 ? 0.0 : static_cast<double>(fired[k]) / static_cast<double>(eligible[k]);
}

bool strict_insertion_allowed(const ScriptSpec& spec, WordView word, std::size_t pos,
                              char32_t cp) {
  const std::size_t n = word.size();
  // A nukta must stay glued to its base or the orphan rule deletes it.
  if (pos < n && spec.is(word[pos], C::Nukta)) return false;
  const auto kt = spec.khanda_ta();
  const char32_t connector = spec.connector();
  // Anything after [ta, connector] other than a consonant turns it into
  // khanda ta.
  if (kt && pos >= 2 && word[pos - 2] == kt->base && word[pos - 1] == connector) return false;
  if (cp != connector) return true;

  // Foreign codepoints vanish before connectors are judged, so look past them.
  std::size_t left = pos;
  while (left > 0 && spec.is(word[left - 1], C::Foreign)) --left;
  std::size_t right = pos;
  while (right < n && spec.is(word[right], C::Foreign)) ++right;
  const bool has_left = left > 0;
  const bool has_right = right < n;
  if (has_left) {
    const char32_t a = word[left - 1];
    // (base, nukta) recomposes into a consonant before connectors are judged.
    if (spec.is(a, C::Nukta)) return false;
    if (kt && a == kt->base) return false;
  }
  if (has_left && has_right && spec.is(word[left - 1], C::Consonant) &&
      spec.is(word[right], C::Consonant)) {
    return false;
  }
  return true;
}

Word attack_word(const ScriptSpec& spec, WordView word, const AttackConfig& cfg,
                 AttackTrace* trace) {
  cfg.validate();
  return Attacker(spec, cfg, cfg.seed, trace).run(word);
}

std::vector<Word> attack_corpus(const ScriptSpec& spec, const std::vector<Word>& words,
                                const AttackConfig& cfg, AttackTrace* trace) {
  cfg.validate();
  std::vector<Word> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back(Attacker(spec, cfg, derive_seed(cfg.seed, i), trace).run(words[i]));
  }
  return out;
}

}  // namespace abugida
