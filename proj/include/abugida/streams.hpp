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

// Line-streaming drivers behind the command-line tool.
//
// Input is read one line at a time. Tokens are maximal runs of
// non-whitespace codepoints; the whitespace between them is copied through
// unchanged, including a missing final newline.
//
// Normalization report format, one JSON object per changed word:
//   {"line":1,"token":0,"word":"...","normalized":"...",
//    "fixes":[{"fix":"FD","position":4,"removed":["U+09CD"],"inserted":[]}]}
// `line` is 1-based, `token` is the 0-based index within the line, and each
// fix position indexes the word as it stood just before that fix.

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "abugida/corpus.hpp"
#include "abugida/noise_injector.hpp"
#include "abugida/normalizer.hpp"
#include "abugida/script_spec.hpp"

namespace abugida {

struct StreamSummary {
  std::size_t lines = 0;
  std::size_t words = 0;
  std::size_t changed = 0;
  std::size_t errors = 0;
};

// Calls on_space for each whitespace run and on_token for each token, in
// order. Concatenating what both receive reproduces the line.
void split_tokens(WordView line, const std::function<void(WordView)>& on_space,
                  const std::function<void(WordView)>& on_token);

StreamSummary normalize_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                               const NormalizerOptions& options, std::ostream* report = nullptr);

struct ParseStreamOptions {
  bool components = false;
  bool auto_normalize = false;
};

// One output line per token: "word\tg1|g2|...", plus a third column of
// "root,vd,cd" triples joined by '|' when components is set. Tokens that are
// not normalized produce a diagnostic on `diag` and are counted in errors.
StreamSummary parse_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                           const ParseStreamOptions& options, std::ostream& diag);

// Token k of the stream (counted across lines) is attacked with key
// derive_seed(cfg.seed, k), matching attack_corpus.
StreamSummary attack_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                            const AttackConfig& cfg);

std::string report_record_json(std::size_t line, std::size_t token, WordView word,
                               const NormalizeResult& result);
std::string stats_json(const CorpusStats& stats);
std::string bench_json(const BenchReport& report);

}  // namespace abugida
