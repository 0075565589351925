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

// Runs the abugida executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef ABUGIDA_CLI
#error "ABUGIDA_CLI must name the abugida executable"
#endif

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("abugida_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs `abugida args` with stderr discarded.
  CliRun run(const std::string& args) const {
    const std::string cmd = std::string(ABUGIDA_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun r{-1, {}};
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, NormalizeLine) {
  write("in.txt", "আমার্ দুই\n");
  const CliRun r = run("normalize --script bn --input " + path("in.txt") + " --report " +
                    path("report.jsonl"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "আমার দুই\n");
  const auto record = nlohmann::json::parse(read("report.jsonl"));
  EXPECT_EQ(record["fixes"][0]["fix"], "IC");
}

TEST_F(CliTest, NormalizeEmptyInput) {
  write("empty.txt", "");
  const CliRun r = run("normalize --input " + path("empty.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, NormalizeToOutputFile) {
  write("in.txt", "সংস্কৃতি কলম\n");
  const CliRun r = run("normalize --input " + path("in.txt") + " --output " + path("out.txt") +
                    " --report " + path("r.jsonl"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(read("out.txt"), "সংস্কৃতি কলম\n");
  EXPECT_EQ(read("r.jsonl"), "");
}

TEST_F(CliTest, NormalizeFlags) {
  write("in.txt", "ৰ ঌ\n");
  EXPECT_EQ(run("normalize --input " + path("in.txt")).out, "র ঌ\n");
  EXPECT_EQ(run("normalize --map-legacy --input " + path("in.txt")).out, "র ৯\n");
  EXPECT_EQ(run("normalize --no-bangla-extensions --input " + path("in.txt")).out, "ৰ ঌ\n");
}

TEST_F(CliTest, Parse) {
  write("in.txt", "সংস্কৃতি\nকলম\n");
  const CliRun r = run("parse --script bn --input " + path("in.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "সংস্কৃতি\tসং|স্কৃ|তি\nকলম\tক|ল|ম\n");
}

TEST_F(CliTest, ParseRejectsUnnormalized) {
  write("in.txt", "আমার্\n");
  EXPECT_EQ(run("parse --input " + path("in.txt")).status, 1);
  const CliRun fixed = run("parse --auto-normalize --input " + path("in.txt"));
  EXPECT_EQ(fixed.status, 0);
  EXPECT_EQ(fixed.out, "আমার\tআ|মা|র\n");
}

TEST_F(CliTest, Stats) {
  write("in.txt", "কলম আমার্ দুই\nকলম\n");
  const CliRun r = run("stats --input " + path("in.txt"));
  EXPECT_EQ(r.status, 0);
  const auto record = nlohmann::json::parse(r.out);
  EXPECT_EQ(record["total_unique_words"], 3);
  EXPECT_EQ(record["affected_words"], 1);
  EXPECT_DOUBLE_EQ(record["affected_percent"].get<double>(), 33.33);
}

TEST_F(CliTest, AttackDeterministicAndValidated) {
  write("in.txt", "কেন্দ্রীয় সংস্কৃতি কলম\nকো আমার\n");
  const std::string args = "attack --seed 7 --intensity 2 --input " + path("in.txt");
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("attack --intensity 0 --input " + path("in.txt")).status, 2);
  EXPECT_EQ(run("attack --p-nukta 1.5 --input " + path("in.txt")).status, 2);
}

TEST_F(CliTest, StrictAttackThenNormalizeRestores) {
  write("raw.txt", "কেন্দ্রীয় সংস্কৃতি কলম\nকো আমার যুদ্ধ\n");
  const std::string text = run("normalize --input " + path("raw.txt")).out;
  write("in.txt", text);
  ASSERT_EQ(run("attack --strict --intensity 5 --seed 3 --input " + path("in.txt") +
                " --output " + path("noisy.txt"))
                .status,
            0);
  EXPECT_NE(read("noisy.txt"), text);
  EXPECT_EQ(run("normalize --input " + path("noisy.txt")).out, text);
}

TEST_F(CliTest, Bench) {
  const CliRun r = run("bench -n 1 --mode parse");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["words_processed"], 1);
  EXPECT_EQ(run("bench -n 0").status, 2);
  EXPECT_EQ(run("bench --mode sideways").status, 2);
}

TEST_F(CliTest, Roots) {
  EXPECT_EQ(run("roots --consonants 3").out, "3\n");
  EXPECT_EQ(run("roots --consonants 4").out, "6\n");
  EXPECT_EQ(run("roots --consonants 2").status, 2);
}

TEST_F(CliTest, Errors) {
  EXPECT_EQ(run("normalize --script xx --input -  < /dev/null").status, 2);
  EXPECT_EQ(run("normalize --input " + path("missing.txt")).status, 1);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(CliTest, SpecFileOverride) {
  write("spec.json", R"({"script_code": "xx", "name": "T", "block": "U+0C80..U+0CFF",
    "classes": {"vowel": ["U+0C85"], "consonant": ["U+0C95..U+0C97"],
                "vowel_diacritic": ["U+0CBE"], "connector": ["U+0CCD"]},
    "connector": "U+0CCD", "nukta": null})");
  write("in.txt", "ಕ್\n");
  const CliRun r = run("normalize --spec-file " + path("spec.json") + " --input " + path("in.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ಕ\n");
  write("bad.json", "{");
  EXPECT_EQ(run("normalize --spec-file " + path("bad.json") + " --input " + path("in.txt")).status,
            1);
}

}  // namespace
