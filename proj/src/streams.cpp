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

#include "abugida/streams.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "abugida/grapheme_parser.hpp"
#include "json.hpp"

namespace abugida {
namespace {

using json = nlohmann::json;

json codepoint_list(WordView word) {
  json list = json::array();
  for (char32_t cp : word) list.push_back(format_codepoint(cp));
  return list;
}

// Runs `per_line` over each line and restores the line break when present.
template <typename F>
void for_each_line(std::istream& in, std::ostream& out, StreamSummary& summary, F per_line) {
  std::string line;
  while (std::getline(in, line)) {
    ++summary.lines;
    per_line(utf8_decode(line));
    if (!in.eof()) out << '\n';
  }
}

std::string grapheme_components(const Grapheme& g) {
  std::string s = utf8_encode(g.root);
  s += ',';
  if (g.vowel_diacritic) utf8_append(s, *g.vowel_diacritic);
  s += ',';
  s += utf8_encode(g.consonant_diacritics);
  return s;
}

}  // namespace

void split_tokens(WordView line, const std::function<void(WordView)>& on_space,
                  const std::function<void(WordView)>& on_token) {
  std::size_t i = 0;
  while (i < line.size()) {
    const bool space = is_whitespace(line[i]);
    std::size_t j = i + 1;
    while (j < line.size() && is_whitespace(line[j]) == space) ++j;
    (space ? on_space : on_token)(line.substr(i, j - i));
    i = j;
  }
}

std::string report_record_json(std::size_t line, std::size_t token, WordView word,
                               const NormalizeResult& result) {
  json fixes = json::array();
  for (const auto& e : result.report.entries) {
    fixes.push_back({{"fix", fix_label(e.fix)},
                     {"position", e.position},
                     {"removed", codepoint_list(e.removed)},
                     {"inserted", codepoint_list(e.inserted)}});
  }
  json record = {{"line", line},
                 {"token", token},
                 {"word", utf8_encode(word)},
                 {"normalized", utf8_encode(result.word)},
                 {"fixes", std::move(fixes)}};
  return record.dump();
}

StreamSummary normalize_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                               const NormalizerOptions& options, std::ostream* report) {
  const NormalizerOptions resolved = resolve_options(spec, options);
  StreamSummary summary;
  for_each_line(in, out, summary, [&](const Word& line) {
    std::size_t token = 0;
    split_tokens(
        line, [&](WordView space) { out << utf8_encode(space); },
        [&](WordView word) {
          ++summary.words;
          NormalizeResult r = normalize_word(spec, word, resolved);
          out << utf8_encode(r.word);
          if (r.word != word) {
            ++summary.changed;
            if (report) *report << report_record_json(summary.lines, token, word, r) << '\n';
          }
          ++token;
        });
  });
  return summary;
}

StreamSummary parse_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                           const ParseStreamOptions& options, std::ostream& diag) {
  StreamSummary summary;
  std::string line;
  while (std::getline(in, line)) {
    ++summary.lines;
    split_tokens(
        utf8_decode(line), [](WordView) {},
        [&](WordView token) {
          ++summary.words;
          Word word(token);
          if (options.auto_normalize) {
            Word normalized = normalize_word(spec, word).word;
            if (normalized != word) ++summary.changed;
            word = std::move(normalized);
          }
          try {
            const ParseResult parsed = parse_word(spec, word);
            std::string row = utf8_encode(word);
            row += '\t';
            for (std::size_t k = 0; k < parsed.graphemes.size(); ++k) {
              if (k) row += '|';
              row += utf8_encode(parsed.graphemes[k].serialize());
            }
            if (options.components) {
              row += '\t';
              for (std::size_t k = 0; k < parsed.graphemes.size(); ++k) {
                if (k) row += '|';
                row += grapheme_components(parsed.graphemes[k]);
              }
            }
            out << row << '\n';
          } catch (const ParseError& e) {
            ++summary.errors;
            diag << "line " << summary.lines << ": " << utf8_encode(word) << ": " << e.what()
                 << '\n';
          }
        });
  }
  return summary;
}

StreamSummary attack_stream(const ScriptSpec& spec, std::istream& in, std::ostream& out,
                            const AttackConfig& cfg) {
  cfg.validate();
  StreamSummary summary;
  AttackConfig word_cfg = cfg;
  for_each_line(in, out, summary, [&](const Word& line) {
    split_tokens(
        line, [&](WordView space) { out << utf8_encode(space); },
        [&](WordView word) {
          word_cfg.seed = derive_seed(cfg.seed, summary.words++);
          Word attacked = attack_word(spec, word, word_cfg);
          if (attacked != word) ++summary.changed;
          out << utf8_encode(attacked);
        });
  });
  return summary;
}

std::string stats_json(const CorpusStats& stats) {
  json histogram = json::object();
  for (int k = 0; k < kFixKindCount; ++k) {
    histogram[std::string(fix_label(static_cast<FixKind>(k)))] = stats.fix_histogram[k];
  }
  json record = {{"script", stats.script},
                 {"total_unique_words", stats.total_unique_words},
                 {"affected_words", stats.affected_words},
                 {"affected_percent", std::round(stats.affected_percent() * 100.0) / 100.0},
                 {"fix_histogram", std::move(histogram)}};
  return record.dump();
}

std::string bench_json(const BenchReport& report) {
  json record = {{"script", report.script},
                 {"mode", report.mode == BenchMode::Parse ? "parse" : "normalize"},
                 {"words_processed", report.words_processed},
                 {"wall_time", report.wall_time},
                 {"words_per_second", report.words_per_second()}};
  return record.dump();
}

}  // namespace abugida
