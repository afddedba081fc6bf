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


#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "locmt/common/error.h"
#include "locmt/metrics/ter.h"
#include "support/ter_oracle.h"

namespace locmt::metrics {
namespace {

std::vector<std::uint32_t> Ids(const std::string& s) { return {s.begin(), s.end()}; }

TerAlignment TerOf(const std::string& hyp, const std::string& ref) {
  const MetricSignature sig = MetricSignature::Ter();
  return TerSegmentTokens(TercomTokenize(hyp, sig), TercomTokenize(ref, sig));
}

TEST(TerTest, SwapIsOneShift) {
  const TerAlignment a = TerOf("b a", "a b");
  EXPECT_EQ(a.shifts, 1);
  EXPECT_EQ(a.edits(), 1);
  EXPECT_EQ(a.ref_length, 2);
  EXPECT_DOUBLE_EQ(a.Rate(), 0.5);
}

TEST(TerTest, SingleSubstitution) {
  const TerAlignment a = TerOf("x", "y");
  EXPECT_EQ(a.substitutions, 1);
  EXPECT_EQ(a.edits(), 1);
}

TEST(TerTest, EditNamesFollowHypothesisSide) {
  const TerAlignment extra = TerOf("a b c", "a b");
  EXPECT_EQ(extra.insertions, 1);
  EXPECT_EQ(extra.deletions, 0);
  const TerAlignment missing = TerOf("a b", "a b c");
  EXPECT_EQ(missing.deletions, 1);
  EXPECT_EQ(missing.insertions, 0);
}

TEST(TerTest, CaseInsensitiveByDefault) { EXPECT_EQ(TerOf("The Cat", "the cat").edits(), 0); }

TEST(TerTest, EmptyReferenceSegment) {
  const std::vector<std::string> hyps = {"a b c", "x y"};
  const std::vector<std::string> refs = {"", "x y"};
  const TerResult r = Ter(hyps, refs);
  EXPECT_EQ(r.alignments[0].insertions, 3);
  EXPECT_EQ(r.alignments[0].ref_length, 0);
  EXPECT_EQ(r.total_ref_length, 2);
  EXPECT_DOUBLE_EQ(r.score.value, 150.0);
}

TEST(TerTest, AllReferencesEmptyIsAnError) {
  const std::vector<std::string> hyps = {"a"};
  const std::vector<std::string> refs = {" "};
  try {
    Ter(hyps, refs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyRef);
  }
}

TEST(TerTest, IdentityIsZero) {
  const std::vector<std::string> x = {"Hello there, friend.", "A B C"};
  EXPECT_EQ(Ter(x, x).score.value, 0.0);
}

// Reference scorer results for every pair of at most 4 tokens over a
// 3-symbol alphabet plus 20000 random pairs of up to 6 tokens.
TEST(TerTest, MatchesReferenceScorerOnSmallPairs) {
  std::ifstream in(LOCMT_FIXTURE_DIR "/golden/ter_small.txt");
  ASSERT_TRUE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto p1 = line.find('|');
    const auto p2 = line.find('|', p1 + 1);
    const std::string h = line.substr(0, p1);
    const std::string r = line.substr(p1 + 1, p2 - p1 - 1);
    const int expected = std::stoi(line.substr(p2 + 1));
    ASSERT_EQ(TerSegmentIds(Ids(h), Ids(r)).edits(), expected) << h << " | " << r;
    ++rows;
  }
  EXPECT_EQ(rows, 34520);
}

// The library's banded, row-reusing search against the plain oracle on
// sequences short enough for the band to cover the whole matrix.
TEST(TerTest, MatchesGreedyOracle) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 4000; ++iter) {
    const int alphabet = 2 + static_cast<int>(rng() % 4);
    const int n = static_cast<int>(rng() % 13);
    const int m = 1 + static_cast<int>(rng() % 12);
    testing::Words h(n);
    testing::Words r(m);
    for (auto& w : h) w = static_cast<int>(rng() % alphabet);
    for (auto& w : r) w = static_cast<int>(rng() % alphabet);
    const std::vector<std::uint32_t> hi(h.begin(), h.end());
    const std::vector<std::uint32_t> ri(r.begin(), r.end());
    ASSERT_EQ(TerSegmentIds(hi, ri).edits(), testing::OracleGreedyTer(h, r)) << "iter " << iter;
  }
}

TEST(TerTest, NeverWorseThanPlainEditDistance) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = static_cast<int>(rng() % 20);
    const int m = 1 + static_cast<int>(rng() % 20);
    testing::Words h(n);
    testing::Words r(m);
    for (auto& w : h) w = static_cast<int>(rng() % 5);
    for (auto& w : r) w = static_cast<int>(rng() % 5);
    const std::vector<std::uint32_t> hi(h.begin(), h.end());
    const std::vector<std::uint32_t> ri(r.begin(), r.end());
    ASSERT_LE(TerSegmentIds(hi, ri).edits(), testing::OracleLevenshtein(h, r).cost);
  }
}

TEST(TerTest, LongSegmentsUseTheBand) {
  // A length ratio above 50 widens the band; every missing word still counts.
  std::vector<std::uint32_t> hyp = {1};
  std::vector<std::uint32_t> ref(120, 2);
  ref[60] = 1;
  EXPECT_EQ(TerSegmentIds(hyp, ref).edits(), 119);
}

}  // namespace
}  // namespace locmt::metrics
