// Copyright 2026 The locmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "locmt/cli/app.h"
#include "locmt/corpus/segment_io.h"
#include "locmt/qa/finding.h"
#include "locmt/qa/suite.h"
#include "support/qa_fixture.h"
#include "support/synthetic_corpus.h"

namespace locmt::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "locmt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("locmt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv(kConfigEnv);
  }
  void TearDown() override {
    unsetenv(kConfigEnv);
    fs::remove_all(dir_);
  }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }
  std::string Write(const std::string& name, const std::string& content) const {
    corpus::WriteFile(P(name), content);
    return P(name);
  }
  std::string Planted() const {
    const auto pc = testing::MakePlantedCorpus(2024, 820, 50, 30, 100);
    const std::string seg = Write("planted.jsonl", corpus::WriteSegmentsJsonl(pc.segments));
    return Write("manifest.json",
                 json{{"entries", {{{"title", "Planted"}, {"developer_year", "2024"}, {"files", {"planted.jsonl"}}}}}}
                     .dump());
  }

  fs::path dir_;
};

TEST_F(CliTest, StatsOnEmptyBitext) {
  const Result r = Cli({"stats", "--source", Write("a.en", ""), "--target", Write("a.fr", ""), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["sentences"], 0);
  EXPECT_EQ(j["src_tokens"], 0);
  EXPECT_EQ(j["tgt_tokens"], 0);
  EXPECT_EQ(j["tool_version"], LOCMT_VERSION);
}

TEST_F(CliTest, CompareIdentity) {
  const std::string ref = Write("ref.txt", "the dragon is coming to the village\nwhere did you put my iron sword\n");
  const Result r = Cli({"compare", "--ref", ref, "--system", "same=" + ref, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json row = json::parse(r.out)["systems"][0];
  std::vector<std::string> texts;
  for (const auto& s : row["scores"]) texts.push_back(s["text"]);
  EXPECT_EQ(texts, (std::vector<std::string>{"100.00", "100.00", "0.00"}));
  const Result text = Cli({"compare", "--ref", ref, "--system", "same=" + ref});
  EXPECT_NE(text.out.find("100.00     100.00       0.00"), std::string::npos) << text.out;
}

TEST_F(CliTest, CompareRendersStoredTable) {
  const Result r = Cli({"compare", "--from-json", LOCMT_FIXTURE_DIR "/table_skyrim.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto custom = r.out.find("Custom");
  const auto deepl = r.out.find("DeepL");
  const auto google = r.out.find("Google Translate");
  ASSERT_NE(custom, std::string::npos);
  EXPECT_LT(custom, deepl);
  EXPECT_LT(deepl, google);
  EXPECT_NE(r.out.find("BLEU↑"), std::string::npos);
  EXPECT_NE(r.out.find("TER↓"), std::string::npos);
  EXPECT_NE(r.out.find("37.14      55.80      53.32"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("27.75      48.25      66.75"), std::string::npos);
}

TEST_F(CliTest, BuildCountsPlantedDefects) {
  const std::string manifest = Planted();
  const Result r = Cli({"build", "--manifest", manifest, "--out", P("out"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json clean = json::parse(r.out)["clean"];
  EXPECT_EQ(clean["input_count"], 1000);
  EXPECT_EQ(clean["removed_empty"], 50);
  EXPECT_EQ(clean["removed_untranslated"], 30);
  EXPECT_EQ(clean["removed_duplicates"], 100);
  EXPECT_EQ(clean["output_count"], 820);
  EXPECT_EQ(corpus::LoadSegments(P("out/corpus.jsonl")).size(), 820u);
  EXPECT_TRUE(fs::exists(P("out/build_report.json")));
  EXPECT_TRUE(fs::exists(P("out/build_report.txt")));
}

TEST_F(CliTest, OutputsIndependentOfRunAndThreads) {
  const std::string manifest = Planted();
  ASSERT_EQ(Cli({"build", "-m", manifest, "-o", P("a"), "-j", "1"}).code, 0);
  ASSERT_EQ(Cli({"build", "-m", manifest, "-o", P("b"), "-j", "4"}).code, 0);
  for (const char* f : {"corpus.jsonl", "build_report.json", "build_report.txt"}) {
    EXPECT_EQ(corpus::ReadFile(P(std::string("a/") + f)), corpus::ReadFile(P(std::string("b/") + f))) << f;
  }
  const std::string corpus = P("a/corpus.jsonl");
  ASSERT_EQ(Cli({"split", "-i", corpus, "-o", P("s1"), "--valid", "40", "--test", "20", "--seed", "9"}).code, 0);
  ASSERT_EQ(Cli({"split", "-i", corpus, "-o", P("s2"), "--valid", "40", "--test", "20", "--seed", "9"}).code, 0);
  ASSERT_EQ(Cli({"split", "-i", corpus, "-o", P("s3"), "--valid", "40", "--test", "20", "--seed", "10"}).code, 0);
  EXPECT_EQ(corpus::ReadFile(P("s1/test.jsonl")), corpus::ReadFile(P("s2/test.jsonl")));
  EXPECT_NE(corpus::ReadFile(P("s1/test.jsonl")), corpus::ReadFile(P("s3/test.jsonl")));
  EXPECT_EQ(corpus::LoadSegments(P("s1/train.jsonl")).size(), 760u);
}

TEST_F(CliTest, ReportPrefixWritesJsonAndText) {
  const std::string manifest = Planted();
  ASSERT_EQ(Cli({"build", "-m", manifest, "-o", P("out")}).code, 0);
  const Result r = Cli({"clean", "-i", P("out/corpus.jsonl"), "-o", P("again.jsonl"), "--report", P("rep/clean")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(corpus::ReadFile(P("rep/clean.json")));
  EXPECT_EQ(j["report"], "clean");
  EXPECT_EQ(j["output_count"], 820);
  EXPECT_EQ(corpus::ReadFile(P("rep/clean.txt")), r.out);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  const Result missing = Cli({"split", "-i", P("nope.jsonl")});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("Usage: split"), std::string::npos);
  const std::string seg = Write("s.jsonl", "");
  const Result no_seed = Cli({"split", "-i", seg, "-o", P("x"), "--valid", "1", "--test", "1"});
  EXPECT_EQ(no_seed.code, kExitUsage);
  EXPECT_NE(no_seed.err.find("--seed"), std::string::npos);
  const std::string ref = Write("r.txt", "a\n");
  EXPECT_EQ(Cli({"score", "--hyp", ref, "--ref", ref, "--sig", "bleu.colour=red"}).code, kExitUsage);
  EXPECT_EQ(Cli({"recipe", "--set", "bogus=1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"export", "-i", seg, "-f", "xlsx", "-o", P("o")}).code, kExitUsage);
  EXPECT_EQ(Cli({"stats"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrorsExitTwoWithContext) {
  const std::string bad = Write("bad.jsonl", "{\"source\":\"a\"}\n");
  const Result r = Cli({"clean", "-i", bad});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("bad.jsonl"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
  const Result len = Cli({"score", "--hyp", Write("h.txt", "a\n"), "--ref", Write("r.txt", "a\nb\n")});
  EXPECT_EQ(len.code, kExitData);
  const Result tmx = Cli({"stats", "-i", Write("x.tmx", "<tmx version=\"1.4\"><body>")});
  EXPECT_EQ(tmx.code, kExitData);
  EXPECT_NE(tmx.err.find("x.tmx"), std::string::npos);
  EXPECT_EQ(Cli({"recipe", "--overrides", Write("o.json", "{\"bogus\":1}")}).code, kExitData);
}

TEST_F(CliTest, ConfigFromEnvironment) {
  const std::string manifest = Planted();
  ASSERT_EQ(Cli({"build", "-m", manifest, "-o", P("out")}).code, 0);
  const std::string cfg =
      Write("cfg.json", json{{"valid_size", 10}, {"test_size", 5}, {"seed", 3}, {"output_dir", "split"}}.dump());
  setenv(kConfigEnv, cfg.c_str(), 1);
  const Result r = Cli({"split", "-i", P("out/corpus.jsonl"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["valid"], 10);
  EXPECT_EQ(j["test"], 5);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(fs::exists(P("split/train.jsonl")));
  EXPECT_EQ(json::parse(Cli({"split", "-i", P("out/corpus.jsonl"), "--test", "7", "--json"}).out)["test"], 7);

  Write("cfg.json", json{{"sede", 3}}.dump());
  EXPECT_EQ(Cli({"split", "-i", P("out/corpus.jsonl")}).code, kExitData);
  setenv(kConfigEnv, P("absent.json").c_str(), 1);
  EXPECT_EQ(Cli({"stats", "-i", P("out/corpus.jsonl")}).code, kExitUsage);
}

TEST_F(CliTest, ExportRoundTrip) {
  const std::string manifest = Planted();
  ASSERT_EQ(Cli({"build", "-m", manifest, "-o", P("out")}).code, 0);
  ASSERT_EQ(Cli({"export", "-i", P("out/corpus.jsonl"), "-f", "tmx", "-o", P("c.tmx")}).code, 0);
  ASSERT_EQ(Cli({"export", "-i", P("c.tmx"), "-f", "jsonl", "-o", P("back.jsonl")}).code, 0);
  // Segments without a key get their id as the TMX key; that is the only addition.
  auto back = corpus::LoadSegments(P("back.jsonl"));
  for (auto& s : back) {
    EXPECT_EQ(s.meta.at("key"), corpus::FormatId(s.id));
    s.meta.erase("key");
  }
  EXPECT_EQ(corpus::WriteSegmentsJsonl(back), corpus::ReadFile(P("out/corpus.jsonl")));
  ASSERT_EQ(Cli({"export", "-i", P("c.tmx"), "-f", "bitext", "-o", P("c.en"), "--out-target", P("c.fr")}).code, 0);
  const std::string a = Cli({"stats", "-i", P("c.tmx"), "--json"}).out;
  const std::string b = Cli({"stats", "--source", P("c.en"), "--target", P("c.fr"), "--json"}).out;
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, QaMatchesLibrary) {
  const auto fx = testing::MakeQaPlanted(3, 10, 2);
  const std::string in = Write("qa.jsonl", corpus::WriteSegmentsJsonl(fx.segments));
  const Result r = Cli({"qa", "-i", in, "--findings", P("f.jsonl"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const qa::QaReport lib = qa::RunSuite(fx.segments, qa::QaConfig::Default());
  EXPECT_EQ(corpus::ReadFile(P("f.jsonl")), qa::FindingsToJsonl(lib.findings));
  json summary = json::parse(r.out);
  for (const char* k : {"report", "tool", "tool_version"}) summary.erase(k);
  EXPECT_EQ(summary, lib.SummaryJson());
}

TEST_F(CliTest, RecipeDefaults) {
  const Result r = Cli({"recipe", "--set", "beam_size=4", "-o", P("recipe.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "locmt.recipe/1");
  EXPECT_EQ(j["beam_size"], 4);
  EXPECT_EQ(corpus::ReadFile(P("recipe.json")), r.out);
}

}  // namespace
}  // namespace locmt::cli
