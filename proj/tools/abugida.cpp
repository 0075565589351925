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

// abugida: normalize, parse, attack and measure Abugida text.
//
// Exit status: 0 on success, 2 on usage errors, 1 on data errors.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "abugida/corpus.hpp"
#include "abugida/script_spec.hpp"
#include "abugida/streams.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string script = "bn";
  std::string spec_file;
  std::string input = "-";
  std::string output = "-";
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw DataError("cannot read " + path);
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw DataError("cannot write " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }
  void finish() {
    get().flush();
    if (!get()) throw DataError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_input = true) {
  cmd->add_option("--script", args.script, "Script code")
      ->check(CLI::IsMember(abugida::bundled_script_codes()))
      ->capture_default_str();
  cmd->add_option("--spec-file", args.spec_file, "Load the script spec from a JSON file")
      ->check(CLI::ExistingFile);
  if (with_input) cmd->add_option("--input", args.input, "Input path or -")->capture_default_str();
  cmd->add_option("--output", args.output, "Output path or -")->capture_default_str();
}

abugida::ScriptSpec load_spec(const CommonArgs& args) {
  if (!args.spec_file.empty()) return abugida::load_script_spec_file(args.spec_file);
  return abugida::bundled_spec(args.script);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Normalize, segment and stress-test Abugida text"};
  app.require_subcommand(1);

  CommonArgs common;

  auto* normalize = app.add_subcommand("normalize", "Normalize every whitespace-separated word");
  add_common(normalize, common);
  std::string report_path;
  bool map_legacy = false;
  bool no_extensions = false;
  normalize->add_option("--report", report_path, "Write JSON Lines fix records here");
  normalize->add_flag("--map-legacy", map_legacy, "Replace legacy signs with their modern forms");
  normalize->add_flag("--no-bangla-extensions", no_extensions, "Skip the Bangla-only rules");

  auto* parse = app.add_subcommand("parse", "Segment normalized words into graphemes");
  add_common(parse, common);
  abugida::ParseStreamOptions parse_opts;
  parse->add_flag("--components", parse_opts.components, "Add a root,vd,cd column");
  parse->add_flag("--auto-normalize", parse_opts.auto_normalize, "Normalize before parsing");

  auto* stats = app.add_subcommand("stats", "Count words changed by normalization");
  add_common(stats, common);

  auto* attack = app.add_subcommand("attack", "Inject noise into every word");
  add_common(attack, common);
  abugida::AttackConfig cfg;
  const auto unit = CLI::Range(0.0, 1.0);
  attack->add_option("--p-connector", cfg.p_connector_nonglyph)->check(unit)->capture_default_str();
  attack->add_option("--p-nukta", cfg.p_break_nukta)->check(unit)->capture_default_str();
  attack->add_option("--p-diacritic", cfg.p_break_diacritic)->check(unit)->capture_default_str();
  attack->add_option("--p-vowel", cfg.p_vowel_vd)->check(unit)->capture_default_str();
  attack->add_option("--intensity", cfg.intensity)
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  attack->add_option("--seed", cfg.seed)->capture_default_str();
  attack->add_flag("--strict", cfg.strict, "Only inject noise the normalizer can undo");

  auto* bench = app.add_subcommand("bench", "Time parsing or normalization of synthetic words");
  add_common(bench, common, /*with_input=*/false);
  std::size_t bench_words = 100000;
  std::string bench_mode = "parse";
  std::uint64_t bench_seed = 1;
  bench->add_option("-n,--words", bench_words)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--mode", bench_mode)
      ->check(CLI::IsMember({"parse", "normalize"}))
      ->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();

  auto* roots = app.add_subcommand("roots", "Evaluate the grapheme-root count formula");
  std::optional<std::uint64_t> consonants;
  std::string roots_script = "bn";
  roots->add_option("--consonants", consonants, "Consonant count (default: the script's)")
      ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 20));
  roots->add_option("--script", roots_script, "Script code")
      ->check(CLI::IsMember(abugida::bundled_script_codes()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*roots) {
      const std::uint64_t n =
          consonants ? *consonants
                     : abugida::bundled_spec(roots_script)
                           .members(abugida::CodepointClass::Consonant)
                           .size();
      std::cout << abugida::possible_roots(n) << '\n';
      return 0;
    }

    const abugida::ScriptSpec spec = load_spec(common);
    Output out(common.output);

    if (*bench) {
      const auto mode = bench_mode == "parse" ? abugida::BenchMode::Parse
                                              : abugida::BenchMode::Normalize;
      out.get() << abugida::bench_json(abugida::run_bench(spec, bench_words, mode, bench_seed))
                << '\n';
      out.finish();
      return 0;
    }

    Input in(common.input);
    if (*normalize) {
      abugida::NormalizerOptions options;
      options.map_legacy = map_legacy;
      if (no_extensions) options.bangla_extensions = false;
      std::unique_ptr<Output> report;
      if (!report_path.empty()) report = std::make_unique<Output>(report_path);
      abugida::normalize_stream(spec, in.get(), out.get(), options,
                                report ? &report->get() : nullptr);
      if (report) report->finish();
    } else if (*parse) {
      const auto summary = abugida::parse_stream(spec, in.get(), out.get(), parse_opts, std::cerr);
      out.finish();
      if (summary.errors) {
        std::cerr << summary.errors << " of " << summary.words << " words not normalized\n";
        return kExitData;
      }
    } else if (*stats) {
      out.get() << abugida::stats_json(abugida::compute_corpus_stats(spec, in.get())) << '\n';
    } else if (*attack) {
      abugida::attack_stream(spec, in.get(), out.get(), cfg);
    }
    if (in.get().bad()) throw DataError("read failed");
    out.finish();
    return 0;
  } catch (const abugida::SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
