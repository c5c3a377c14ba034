// Copyright 2026 The detscore Authors.
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

#include "detscore/cli.h"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "testing/temp_dir.h"

namespace detscore {
namespace {

using testing::Slurp;
using testing::TempDir;

const std::string kGolden = DETSCORE_SOURCE_DIR "/tests/data/golden";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "detscore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> GoldenArgs(const std::string& cmd, const std::string& out_dir) {
  return {cmd, "--positive", kGolden + "/positive.tsv", "--negative",
          kGolden + "/negative.tsv", "--lexicon", kGolden + "/lexicon.txt",
          "--out", out_dir};
}

// Corpus pair where "selenium" tops the ranking of both C_p documents holding it.
void WriteRankFixture(const TempDir& dir) {
  dir.Write("p/1.txt", "selenium selenium selenium copper");
  dir.Write("p/2.txt", "selenium selenium selenium zinc copper");
  dir.Write("p/3.txt", "copper iron");
  dir.Write("n/1.txt", "copper iron zinc");
  dir.Write("n/2.txt", "iron");
  dir.Write("pos.tsv", "p1\tp/1.txt\np2\tp/2.txt\np3\tp/3.txt\n");
  dir.Write("neg.tsv", "n1\tn/1.txt\nn2\tn/2.txt\n");
  dir.Write("lex.txt", "Selenium\nCopper\n");
}

TEST(AnalyzeTest, GoldenFixtureHasOneRow) {
  TempDir dir;
  const Result r = RunTool(GoldenArgs("analyze", dir.path().string()));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rows: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("universe: 25 terms"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("threshold: 0.733333"), std::string::npos) << r.out;
  EXPECT_EQ(Slurp(dir.path() / "determinants.csv"),
            Slurp(DETSCORE_SOURCE_DIR "/tests/golden/determinants.csv"));
  for (const char* f : {"scores.csv", "distribution.csv", "distribution.json", "qq.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir.path() / f)) << f;
  }
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "determinants.json"));
}

TEST(AnalyzeTest, JsonFormat) {
  TempDir dir;
  auto args = GoldenArgs("analyze", dir.path().string());
  args.insert(args.end(), {"--format", "json"});
  ASSERT_EQ(RunTool(args).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "determinants.json"));
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "determinants.csv"));
}

TEST(AnalyzeTest, DistributionSidecarIncludesFilterPercentile) {
  TempDir dir;
  auto args = GoldenArgs("analyze", dir.path().string());
  args.insert(args.end(), {"--percentile", "60"});
  ASSERT_EQ(RunTool(args).code, 0);
  const std::string json = Slurp(dir.path() / "distribution.json");
  for (const char* key : {"\"25\"", "\"50\"", "\"60\"", "\"75\"", "\"90\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key << "\n" << json;
  }
}

TEST(AnalyzeTest, MissingLexiconIsIoError) {
  TempDir dir;
  auto args = GoldenArgs("analyze", dir.path().string());
  const std::string missing = (dir.path() / "no-such-lexicon.txt").string();
  args[6] = missing;
  const Result r = RunTool(args);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(missing), std::string::npos) << r.err;
}

TEST(AnalyzeTest, EmptyPositiveCorpus) {
  TempDir dir;
  const auto empty = dir.Write("empty.tsv", "# no documents\n");
  auto args = GoldenArgs("analyze", (dir.path() / "out").string());
  args[2] = empty.string();
  const Result r = RunTool(args);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("positive corpus empty"), std::string::npos) << r.err;
}

TEST(AnalyzeTest, InvalidPercentile) {
  TempDir dir;
  auto args = GoldenArgs("analyze", dir.path().string());
  args.insert(args.end(), {"--percentile", "100"});
  EXPECT_EQ(RunTool(args).code, 1);
}

TEST(AnalyzeTest, UsageErrors) {
  EXPECT_EQ(RunTool({}).code, 1);
  EXPECT_EQ(RunTool({"analyze"}).code, 1);
  EXPECT_EQ(RunTool({"bogus"}).code, 1);
  EXPECT_EQ(RunTool({"--help"}).code, 0);
}

TEST(AnalyzeTest, ImbalanceWarning) {
  TempDir dir;
  dir.Write("p.txt", "copper zinc iron copper zinc iron");
  dir.Write("n.txt", "copper");
  dir.Write("pos.tsv", "p\tp.txt\n");
  dir.Write("neg.tsv", "n\tn.txt\n");
  dir.Write("lex.txt", "copper\n");
  const auto base = dir.path().string();
  const Result r = RunTool({"analyze", "--positive", base + "/pos.tsv", "--negative",
                        base + "/neg.tsv", "--lexicon", base + "/lex.txt", "--out",
                        base + "/out"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning: corpus lengths differ"), std::string::npos) << r.err;
}

TEST(TfidfBaselineTest, GoldenTerms) {
  TempDir dir;
  auto args = GoldenArgs("tfidf-baseline", dir.path().string());
  args.insert(args.end(), {"--terms", "zeaxanthin,copper,zinc,lutein"});
  const Result r = RunTool(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Slurp(dir.path() / "tfidf_comparison.csv"),
            Slurp(DETSCORE_SOURCE_DIR "/tests/golden/tfidf_comparison.csv"));
}

TEST(TfidfBaselineTest, DefaultsToReportRows) {
  TempDir dir;
  const Result r = RunTool(GoldenArgs("tfidf-baseline", dir.path().string()));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Slurp(dir.path() / "tfidf_comparison.csv"),
            "term,mean_rank_cp,mean_rank_cn\nzeaxanthin,15.750000,NA\n");
}

TEST(TfidfBaselineTest, EmptyTermList) {
  TempDir dir;
  auto args = GoldenArgs("tfidf-baseline", dir.path().string());
  args.insert(args.end(), {"--terms", ""});
  const Result r = RunTool(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Slurp(dir.path() / "tfidf_comparison.csv"), "term,mean_rank_cp,mean_rank_cn\n");
}

TEST(TfidfBaselineTest, TopRankedEverywhere) {
  TempDir dir;
  WriteRankFixture(dir);
  const auto base = dir.path().string();
  const Result r = RunTool({"tfidf-baseline", "--positive", base + "/pos.tsv", "--negative",
                        base + "/neg.tsv", "--out", base + "/out", "--terms", "Selenium"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Slurp(dir.path() / "out/tfidf_comparison.csv"),
            "term,mean_rank_cp,mean_rank_cn\nselenium,1.000000,NA\n");
}

TEST(TfidfBaselineTest, MultiTokenTermRejected) {
  TempDir dir;
  auto args = GoldenArgs("tfidf-baseline", dir.path().string());
  args.insert(args.end(), {"--terms", "omega-3 fatty acids"});
  EXPECT_EQ(RunTool(args).code, 1);
}

TEST(DumpNormalizedTest, PipelineTrace) {
  TempDir dir;
  dir.Write("a.txt", "The copper study");
  dir.Write("e.txt", "");
  const auto manifest = dir.Write("m.tsv", "a\ta.txt\ne\te.txt\n").string();
  const Result r = RunTool({"dump-normalized", "--positive", manifest, "--id", "a"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "copper:1\nstudy:1\n");

  const Result empty = RunTool({"dump-normalized", "--negative", manifest, "--id", "e"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");

  const Result unknown = RunTool({"dump-normalized", "--positive", manifest, "--id", "zz"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("unknown document id"), std::string::npos);
}

TEST(DumpNormalizedTest, SuffixRulesFlag) {
  TempDir dir;
  dir.Write("a.txt", "supplies");
  const auto manifest = dir.Write("m.tsv", "a\ta.txt\n").string();
  EXPECT_EQ(RunTool({"dump-normalized", "--positive", manifest, "--id", "a"}).out, "supply:1\n");
  EXPECT_EQ(RunTool({"dump-normalized", "--positive", manifest, "--id", "a", "--no-suffix-rules"}).out,
            "supplies:1\n");
}

TEST(ConfigFileTest, FlagsFromToml) {
  TempDir dir;
  const auto cfg = dir.Write("run.toml",
                             "[analyze]\n"
                             "positive = \"" + kGolden + "/positive.tsv\"\n"
                             "negative = \"" + kGolden + "/negative.tsv\"\n"
                             "lexicon = \"" + kGolden + "/lexicon.txt\"\n"
                             "out = \"" + (dir.path() / "out").string() + "\"\n");
  const Result r = RunTool({"--config", cfg.string(), "analyze"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rows: 1"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace detscore
