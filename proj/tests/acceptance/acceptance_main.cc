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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "locmt/cli/app.h"
#include "locmt/corpus/clean.h"
#include "locmt/corpus/segment_io.h"
#include "locmt/corpus/split.h"
#include "locmt/corpus/stats.h"
#include "locmt/locfile/tmx.h"
#include "locmt/metrics/bleu.h"
#include "locmt/metrics/chrf.h"
#include "locmt/metrics/score.h"
#include "locmt/metrics/ter.h"
#include "locmt/qa/suite.h"
#include "support/generators.h"
#include "support/qa_fixture.h"
#include "support/synthetic_corpus.h"
#include "support/ter_oracle.h"

namespace locmt::acceptance {
namespace {

constexpr double kMetricTolerance = 0.01;
constexpr std::size_t kMinGoldenVectors = 500;
constexpr int kTerMaxTokens = 6;
constexpr int kTerAlphabet = 3;
constexpr int kIdentityCorpora = 100;
constexpr std::size_t kSplitCorpus = 10000;
// Held-out shares of the 956,659-segment Skyrim corpus.
constexpr double kValidShare = 4785.0 / 956659.0;
constexpr double kTestShare = 501.0 / 956659.0;
constexpr std::size_t kTmxUnits = 10000;
constexpr std::size_t kThroughputSegments = 1000000;
constexpr double kThroughputSeconds = 300.0;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

Outcome MetricOracle() {
  std::ifstream in(LOCMT_FIXTURE_DIR "/golden/metric_vectors.jsonl");
  if (!in) return {false, "golden vectors missing"};
  std::size_t n = 0;
  std::size_t bad = 0;
  double worst[3] = {0, 0, 0};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto v = nlohmann::json::parse(line);
    const auto hyps = v["hyps"].get<std::vector<std::string>>();
    const auto refs = v["refs"].get<std::vector<std::string>>();
    const double got[3] = {metrics::Bleu(hyps, refs).value, metrics::ChrF(hyps, refs).value,
                           metrics::Ter(hyps, refs).score.value};
    const double want[3] = {v["bleu"].get<double>(), v["chrf"].get<double>(), v["ter"].get<double>()};
    bool ok = true;
    for (int m = 0; m < 3; ++m) {
      const double d = std::fabs(got[m] - want[m]);
      worst[m] = std::max(worst[m], d);
      ok = ok && d <= kMetricTolerance;
    }
    bad += ok ? 0 : 1;
    ++n;
  }
  return {n >= kMinGoldenVectors && bad == 0,
          fmt::format("{} vectors, {} outside ±{}; max |diff| BLEU {:.2e} chrF2++ {:.2e} TER {:.2e}", n, bad,
                      kMetricTolerance, worst[0], worst[1], worst[2])};
}

std::vector<testing::Words> AllSequences(int max_len, int alphabet, int min_len) {
  std::vector<testing::Words> out;
  testing::Words cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) >= min_len) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int a = 0; a < alphabet; ++a) {
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::string Show(const testing::Words& w) {
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('a' + x);
  }
  return s;
}

Outcome TerOptimality() {
  const auto hyps = AllSequences(kTerMaxTokens, kTerAlphabet, 0);
  const auto refs = AllSequences(kTerMaxTokens, kTerAlphabet, 1);
  std::size_t pairs = 0;
  std::size_t worse = 0;
  std::string example;
  for (const auto& h : hyps) {
    const std::vector<std::uint32_t> hi(h.begin(), h.end());
    for (const auto& r : refs) {
      const std::vector<std::uint32_t> ri(r.begin(), r.end());
      const int greedy = metrics::TerSegmentIds(hi, ri).edits();
      const int best = testing::OracleExhaustiveTer(h, r);
      ++pairs;
      if (greedy != best) {
        ++worse;
        if (example.empty()) example = fmt::format("'{}' vs '{}': greedy {} exhaustive {}", Show(h), Show(r), greedy, best);
      }
    }
  }
  return {worse == 0, fmt::format("{} pairs, greedy above exhaustive minimum on {} ({:.2f}%){}", pairs, worse,
                                  100.0 * static_cast<double>(worse) / static_cast<double>(pairs),
                                  example.empty() ? "" : "; e.g. " + example)};
}

Outcome Identity() {
  testing::Rng rng(2718);
  const auto& en = testing::EnglishWords();
  int bad = 0;
  for (int c = 0; c < kIdentityCorpora; ++c) {
    std::vector<std::string> x(1 + testing::Uniform(rng, 30));
    for (auto& s : x) {
      const std::size_t len = 1 + testing::Uniform(rng, 40);
      for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) s += ' ';
        s += testing::Uniform(rng, 4) == 0 ? testing::RandomText(rng, 6) : en[testing::Uniform(rng, en.size())];
      }
    }
    // BLEU of a corpus without a single 4-gram is 0 by definition.
    x[0] += " the iron sword of doom";
    const std::string b = metrics::FormatScore(metrics::Bleu(x, x).value);
    const std::string f = metrics::FormatScore(metrics::ChrF(x, x).value);
    const std::string t = metrics::FormatScore(metrics::Ter(x, x).score.value);
    if (b != "100.00" || f != "100.00" || t != "0.00") ++bad;
  }
  return {bad == 0, fmt::format("{} corpora, {} not at 100.00/100.00/0.00", kIdentityCorpora, bad)};
}

Outcome PipelineCounting() {
  const auto pc = testing::MakePlantedCorpus(2024, 820, 50, 30, 100);
  const corpus::CleanResult first = corpus::Clean(pc.segments);
  const corpus::CleanReport& r = first.report;
  const bool counts = r.input_count == 1000 && r.removed_empty == 50 && r.removed_untranslated == 30 &&
                      r.removed_duplicates == 100 && r.removed_by_filter == 0 && r.output_count == 820;
  const corpus::CleanResult again = corpus::Clean(first.segments);
  const bool idempotent = again.segments == first.segments && again.report.output_count == 820 &&
                          again.report.input_count == 820;
  return {counts && idempotent && r.Balanced(),
          fmt::format("in {} empty {} untranslated {} duplicates {} out {}; second pass removes {}", r.input_count,
                      r.removed_empty, r.removed_untranslated, r.removed_duplicates, r.output_count,
                      again.report.input_count - again.report.output_count)};
}

Outcome SplitContract() {
  // 2,000 Skyrim segments among 10,000.
  const auto segs = testing::MakeGameCorpus(4785, 2000, 500, 17);
  if (segs.size() != kSplitCorpus) return {false, "fixture size"};
  corpus::SplitSpec spec;
  spec.valid_size = static_cast<std::size_t>(std::lround(kValidShare * kSplitCorpus));
  spec.test_size = static_cast<std::size_t>(std::lround(kTestShare * kSplitCorpus));
  spec.seed = 20111111;
  spec.scope = std::make_pair(std::string("game"), std::string("Skyrim"));
  auto dump = [](const corpus::SplitResult& r) {
    return corpus::WriteSegmentsJsonl(r.train) + "|" + corpus::WriteSegmentsJsonl(r.valid) + "|" +
           corpus::WriteSegmentsJsonl(r.test);
  };
  const corpus::SplitResult a = corpus::Split(segs, spec);
  const corpus::SplitResult b = corpus::Split(segs, spec);
  corpus::SplitSpec other = spec;
  other.seed += 1;
  const corpus::SplitResult c = corpus::Split(segs, other);

  std::multiset<std::uint64_t> in;
  for (const auto& s : segs) in.insert(s.id);
  std::multiset<std::uint64_t> out;
  std::set<std::uint64_t> distinct;
  bool scoped = true;
  for (const auto* part : {&a.train, &a.valid, &a.test}) {
    for (const auto& s : *part) {
      out.insert(s.id);
      distinct.insert(s.id);
    }
  }
  for (const auto* part : {&a.valid, &a.test}) {
    for (const auto& s : *part) scoped = scoped && s.meta.at("game") == "Skyrim";
  }
  const bool disjoint = distinct.size() == out.size();
  const bool exhaustive = in == out;
  const bool sizes = a.valid.size() == spec.valid_size && a.test.size() == spec.test_size;
  const bool same = dump(a) == dump(b);
  const bool differ = dump(a) != dump(c);
  return {disjoint && exhaustive && sizes && same && differ && scoped,
          fmt::format("train {} valid {} test {}; disjoint {} exhaustive {} same-seed identical {} "
                      "other-seed differs {}",
                      a.train.size(), a.valid.size(), a.test.size(), disjoint, exhaustive, same, differ)};
}

Outcome TmxRoundTrip() {
  testing::Rng rng(1014);
  std::vector<locfile::TranslationUnit> units;
  units.reserve(kTmxUnits);
  for (std::size_t i = 0; i < kTmxUnits; ++i) units.push_back(testing::RandomUnit(rng, i));
  const std::string first = locfile::WriteTmx(units);
  const locfile::TmxDocument doc = locfile::ParseTmx(first);
  const std::string second = locfile::WriteTmx(doc.units);
  const bool units_equal = doc.units == units;
  return {units_equal && first == second && doc.diagnostics.empty(),
          fmt::format("{} units, {} bytes, units equal {}, bytes equal {}", doc.units.size(), first.size(),
                      units_equal, first == second)};
}

Outcome QaRecallPrecision() {
  const auto planted = testing::MakeQaPlanted(31, 60, 8);
  const auto control = testing::MakeQaControl(60);
  const qa::QaReport pr = qa::RunSuite(planted.segments, planted.config);
  const qa::QaReport cr = qa::RunSuite(control.segments, control.config);
  const qa::Category cats[] = {qa::Category::kPlaceholderMismatch, qa::Category::kTermViolation,
                               qa::Category::kUntranslatedTerm, qa::Category::kRegisterInconsistent};
  bool ok = true;
  std::string detail;
  for (qa::Category c : cats) {
    std::vector<std::size_t> got;
    for (const auto& f : pr.findings) {
      if (f.category == c) got.push_back(f.position);
    }
    const auto& want = planted.planted.at(c);
    std::size_t hit = 0;
    for (std::size_t p : want) hit += std::count(got.begin(), got.end(), p) == 1 ? 1 : 0;
    const bool exact = got == want;
    ok = ok && exact && cr.Count(c) == 0;
    detail += fmt::format("{} {}/{} control {}; ", qa::CategoryName(c), hit, want.size(), cr.Count(c));
  }
  ok = ok && cr.findings.empty();
  detail += fmt::format("control total {}", cr.findings.size());
  return {ok, detail};
}

Outcome TableRendering() {
  const std::string path = LOCMT_FIXTURE_DIR "/table_skyrim.json";
  const char* argv[] = {"locmt", "compare", "--from-json", path.c_str()};
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(4, argv, out, err);
  const std::string expected =
      "System                BLEU↑   chrF2++↑       TER↓\n"
      "Custom                37.14      55.80      53.32\n"
      "DeepL                 29.27      50.04      61.26\n"
      "Google Translate      27.75      48.25      66.75\n";
  const bool ok = code == 0 && out.str().rfind(expected, 0) == 0;
  return {ok, ok ? "3 rows, best BLEU first, arrows and 2 decimals" : "got:\n" + out.str() + err.str()};
}

Outcome Throughput() {
  std::mt19937_64 rng(1000000);
  std::vector<corpus::BiSegment> segs;
  segs.reserve(kThroughputSegments);
  for (std::size_t i = 0; i < kThroughputSegments; ++i) segs.push_back(testing::DistinctPair(rng, i));
  std::vector<std::string> hyps;
  std::vector<std::string> refs;
  hyps.reserve(segs.size());
  refs.reserve(segs.size());
  for (const auto& s : segs) {
    refs.push_back(s.target_text);
    // Drop one word so the hypotheses are imperfect.
    std::string h = s.target_text;
    const auto sp = h.find(' ');
    if (sp != std::string::npos) h.erase(0, sp + 1);
    hyps.push_back(std::move(h));
  }
  const auto start = Clock::now();
  const corpus::CleanResult cleaned = corpus::Clean(std::move(segs));
  const double t_clean = Seconds(start);
  const corpus::CorpusStats stats = corpus::ComputeStats(cleaned.segments);
  const double t_stats = Seconds(start);
  const double bleu = metrics::Bleu(hyps, refs, metrics::MetricSignature::Bleu(), 0).value;
  const double chrf = metrics::ChrF(hyps, refs, metrics::MetricSignature::ChrF2pp(), 0).value;
  const double ter = metrics::Ter(hyps, refs, metrics::MetricSignature::Ter(), 0).score.value;
  const double total = Seconds(start);
  return {total < kThroughputSeconds && stats.sentences == kThroughputSegments,
          fmt::format("{} segments on {} hardware threads: clean {:.1f}s, stats {:.1f}s, score {:.1f}s, total "
                      "{:.1f}s (limit {:.0f}s); BLEU {} chrF2++ {} TER {}",
                      stats.sentences, std::thread::hardware_concurrency(), t_clean, t_stats - t_clean,
                      total - t_stats, total, kThroughputSeconds, metrics::FormatScore(bleu),
                      metrics::FormatScore(chrf), metrics::FormatScore(ter))};
}

}  // namespace
}  // namespace locmt::acceptance

int main() {
  using namespace locmt::acceptance;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"metric-oracle-equivalence", MetricOracle},
      {"ter-small-instance-optimality", TerOptimality},
      {"identity-extremes", Identity},
      {"pipeline-counting", PipelineCounting},
      {"split-contract", SplitContract},
      {"tmx-round-trip", TmxRoundTrip},
      {"qa-recall-precision", QaRecallPrecision},
      {"table-rendering", TableRendering},
      {"throughput-1m", Throughput},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, Seconds(start), o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
