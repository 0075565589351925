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

#include "abugida/corpus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "abugida/grapheme_parser.hpp"

namespace abugida {
namespace {

using C = CodepointClass;

constexpr std::array<char32_t, 16> kForeignPool = {
    0x200B, 0x200C, 0x200D, 0xFEFF, 0x25CC, 0x0061, 0x006B, 0x007A,
    0x0041, 0x0037, 0x002E, 0x002C, 0x00E9, 0x0915, 0x0B95, 0x0D15,
};

template <typename T>
const T& choose(CounterRng& rng, const std::vector<T>& items) {
  return items[rng.below(items.size())];
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::domain_error("possible_roots: overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::domain_error("possible_roots: overflow");
  }
  return a + b;
}

}  // namespace

std::uint64_t possible_roots(std::uint64_t consonants) {
  if (consonants < 3) throw std::domain_error("possible_roots: need at least 3 consonants");
  const std::uint64_t m = consonants - 3;
  const std::uint64_t sq = checked_mul(m, m);
  const std::uint64_t cube = checked_mul(sq, m);
  return checked_add(checked_add(checked_add(cube, sq), m), 3);
}

double CorpusStats::affected_percent() const {
  if (total_unique_words == 0) return 0.0;
  return 100.0 * static_cast<double>(affected_words) / static_cast<double>(total_unique_words);
}

std::string CorpusStats::affected_percent_text() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", affected_percent());
  return buf;
}

CorpusStats compute_corpus_stats(const ScriptSpec& spec, std::istream& in,
                                 const NormalizerOptions& options) {
  CorpusStats stats;
  stats.script = spec.script_code();
  std::unordered_set<std::string> seen;
  std::string token;
  while (in >> token) {
    // operator>> splits on ASCII whitespace only; split the rest here.
    Word decoded = utf8_decode(token);
    std::size_t i = 0;
    while (i < decoded.size()) {
      while (i < decoded.size() && is_whitespace(decoded[i])) ++i;
      std::size_t j = i;
      while (j < decoded.size() && !is_whitespace(decoded[j])) ++j;
      if (j > i) {
        Word word = decoded.substr(i, j - i);
        if (seen.insert(utf8_encode(word)).second) {
          NormalizeResult r = normalize_word(spec, word, options);
          if (r.word != word) {
            ++stats.affected_words;
            std::array<bool, kFixKindCount> hit{};
            for (const auto& e : r.report.entries) hit[static_cast<std::size_t>(e.fix)] = true;
            for (int k = 0; k < kFixKindCount; ++k) stats.fix_histogram[k] += hit[k] ? 1 : 0;
          }
        }
      }
      i = j;
    }
  }
  stats.total_unique_words = seen.size();
  return stats;
}

Word fuzz_word(const ScriptSpec& spec, CounterRng& rng, std::size_t max_len,
               double foreign_rate) {
  const auto [lo, hi] = spec.block();
  const std::size_t len = 1 + rng.below(max_len);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.bernoulli(foreign_rate) || hi < lo) {
      w.push_back(kForeignPool[rng.below(kForeignPool.size())]);
    } else {
      w.push_back(lo + static_cast<char32_t>(rng.below(hi - lo + 1)));
    }
  }
  return w;
}

Word synthetic_word(const ScriptSpec& spec, CounterRng& rng, std::size_t target_len) {
  const auto& consonants = spec.members(C::Consonant);
  const auto& vowels = spec.members(C::Vowel);
  const auto& vowel_signs = spec.members(C::VowelDiacritic);
  const auto& consonant_signs = spec.members(C::ConsonantDiacritic);
  const auto& whitelist = spec.data().conjunct_whitelist;
  if (consonants.empty()) return {};

  Word raw;
  raw.reserve(target_len + 8);
  while (raw.size() < target_len) {
    // Vowels mostly open a word.
    if (!vowels.empty() && rng.bernoulli(raw.empty() ? 0.3 : 0.05)) {
      raw.push_back(choose(rng, vowels));
    } else if (rng.bernoulli(0.2)) {
      Word conjunct;
      if (!whitelist.empty()) {
        conjunct = choose(rng, whitelist);
      } else {
        conjunct = {choose(rng, consonants), choose(rng, consonants)};
      }
      for (std::size_t k = 0; k < conjunct.size(); ++k) {
        if (k) raw.push_back(spec.connector());
        raw.push_back(conjunct[k]);
      }
      if (!vowel_signs.empty() && rng.bernoulli(0.5)) raw.push_back(choose(rng, vowel_signs));
    } else {
      raw.push_back(choose(rng, consonants));
      if (!vowel_signs.empty() && rng.bernoulli(0.5)) raw.push_back(choose(rng, vowel_signs));
    }
    if (!consonant_signs.empty() && rng.bernoulli(0.08)) {
      raw.push_back(choose(rng, consonant_signs));
    }
  }
  if (raw.empty()) return raw;
  return normalize_word(spec, raw).word;
}

std::vector<Word> synthetic_corpus(const ScriptSpec& spec, std::size_t count, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  while (out.size() < count) {
    Word w = synthetic_word(spec, rng, 2 + rng.below(9));
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

double BenchReport::words_per_second() const {
  return wall_time > 0.0 ? static_cast<double>(words_processed) / wall_time : 0.0;
}

BenchReport run_bench(const ScriptSpec& spec, std::size_t words, BenchMode mode,
                      std::uint64_t seed) {
  if (words < 1) throw std::invalid_argument("bench needs at least one word");
  const std::vector<Word> corpus = synthetic_corpus(spec, words, seed);
  BenchReport report;
  report.script = spec.script_code();
  report.mode = mode;

  std::size_t sink = 0;
  const auto start = std::chrono::steady_clock::now();
  if (mode == BenchMode::Parse) {
    for (const Word& w : corpus) sink += parse_word(spec, w).graphemes.size();
  } else {
    for (const Word& w : corpus) sink += normalize_word(spec, w).word.size();
  }
  const auto stop = std::chrono::steady_clock::now();
  if (sink == 0) throw std::logic_error("bench produced no output");

  report.words_processed = corpus.size();
  report.wall_time = std::chrono::duration<double>(stop - start).count();
  return report;
}

}  // namespace abugida
