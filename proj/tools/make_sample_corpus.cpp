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

// Regenerates the bundled sample corpora under data/corpora/.
//
//   make_sample_corpus --out-dir data/corpora [--words 10000] [--seed 2026]
//
// Each file holds synthetic normalized words, a fraction of them passed
// through the unrestricted noise protocol, twelve tokens per line. Output
// is a pure function of the flags.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "abugida/corpus.hpp"
#include "abugida/noise_injector.hpp"
#include "abugida/rng.hpp"
#include "abugida/script_spec.hpp"
#include "abugida/unicode.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write the bundled sample corpora"};
  std::string out_dir;
  std::size_t words = 10000;
  std::uint64_t seed = 2026;
  double noisy_fraction = 0.2;
  app.add_option("--out-dir", out_dir)->required();
  app.add_option("--words", words)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  app.add_option("--noisy-fraction", noisy_fraction)->check(CLI::Range(0.0, 1.0));
  CLI11_PARSE(app, argc, argv);

  for (const auto& code : abugida::bundled_script_codes()) {
    const abugida::ScriptSpec& spec = abugida::bundled_spec(code);
    const auto clean = abugida::synthetic_corpus(spec, words, abugida::derive_seed(seed, 0));
    abugida::CounterRng pick(abugida::derive_seed(seed, 1));
    abugida::AttackConfig cfg;
    cfg.seed = abugida::derive_seed(seed, 2);

    const std::string path = out_dir + "/" + code + ".txt";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return 1;
    }
    for (std::size_t i = 0; i < clean.size(); ++i) {
      abugida::Word w = clean[i];
      if (pick.bernoulli(noisy_fraction)) {
        abugida::AttackConfig one = cfg;
        one.seed = abugida::derive_seed(cfg.seed, i);
        w = abugida::attack_word(spec, w, one);
      }
      // Sentence-final danda stays attached to the token.
      if (pick.bernoulli(0.03)) w.push_back(0x0964);
      out << abugida::utf8_encode(w) << ((i + 1) % 12 == 0 || i + 1 == clean.size() ? '\n' : ' ');
    }
    std::cout << path << '\n';
  }
  return 0;
}
