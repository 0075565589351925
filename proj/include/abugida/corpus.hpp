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

// Corpus-level tooling: statistics, synthetic word generation, benchmarks.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "abugida/normalizer.hpp"
#include "abugida/rng.hpp"
#include "abugida/script_spec.hpp"

namespace abugida {

// Number of grapheme roots for `consonants` consonants, counting 2nd and 3rd
// order conjuncts: ((n-3)^3 + (n-3)^2 + (n-3)) + 3. Throws std::domain_error
// for n < 3 or on overflow.
std::uint64_t possible_roots(std::uint64_t consonants);

struct CorpusStats {
  std::string script;
  std::size_t total_unique_words = 0;
  std::size_t affected_words = 0;
  // Unique words whose report contains the fix at least once.
  std::array<std::size_t, kFixKindCount> fix_histogram{};

  double affected_percent() const;
  // "12.81"
  std::string affected_percent_text() const;
};

// Deduplicates whitespace-separated tokens and normalizes each unique one.
CorpusStats compute_corpus_stats(const ScriptSpec& spec, std::istream& in,
                                 const NormalizerOptions& options = {});

// Random word of 1..max_len codepoints drawn from the script block, each
// position replaced by a foreign codepoint with probability foreign_rate.
// Never contains whitespace.
Word fuzz_word(const ScriptSpec& spec, CounterRng& rng, std::size_t max_len = 12,
               double foreign_rate = 0.05);

// Grapheme-shaped random word of roughly `target_len` codepoints, already
// passed through normalize_word. May be empty.
Word synthetic_word(const ScriptSpec& spec, CounterRng& rng, std::size_t target_len);

// `count` non-empty normalized words, deterministic in `seed`.
std::vector<Word> synthetic_corpus(const ScriptSpec& spec, std::size_t count, std::uint64_t seed);

enum class BenchMode { Parse, Normalize };

struct BenchReport {
  std::string script;
  BenchMode mode = BenchMode::Parse;
  std::size_t words_processed = 0;
  double wall_time = 0.0;  // seconds
  double words_per_second() const;
};

// Times `mode` single-threaded over synthetic_corpus(spec, words, seed).
BenchReport run_bench(const ScriptSpec& spec, std::size_t words, BenchMode mode,
                      std::uint64_t seed = 1);

}  // namespace abugida
