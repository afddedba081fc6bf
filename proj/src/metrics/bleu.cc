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


#include "locmt/metrics/bleu.h"

#include <cmath>
#include <vector>

#include "locmt/common/error.h"
#include "locmt/common/parallel.h"
#include "locmt/common/unicode.h"
#include "locmt/metrics/tokenizer_13a.h"
#include "ngram_match.h"

namespace locmt::metrics {
namespace {

constexpr double kLogZero = -9999999999.0;

double LogOrFloor(double x) { return x == 0 ? kLogZero : std::log(x); }

std::string Preprocess(std::string_view s, const MetricSignature& sig) {
  if (sig.case_mode == CaseMode::kLower) {
    const std::string lowered = unicode::ToLower(s);
    return Tokenize13aLine(unicode::StripRight(lowered));
  }
  return Tokenize13aLine(unicode::StripRight(s));
}

void CheckCorpus(std::size_t hyps, std::size_t refs) {
  if (hyps != refs) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hyps) + " hypotheses vs " + std::to_string(refs) + " references");
  }
  if (hyps == 0) throw Error(ErrorCode::kEmptyCorpus, "no segments to score");
}

}  // namespace

BleuStats& BleuStats::operator+=(const BleuStats& o) {
  hyp_len += o.hyp_len;
  ref_len += o.ref_len;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    correct[n] += o.correct[n];
    total[n] += o.total[n];
  }
  return *this;
}

BleuStats BleuSegmentStats(std::string_view hyp, std::string_view ref, const MetricSignature& sig) {
  const std::string h = Preprocess(hyp, sig);
  const std::string r = Preprocess(ref, sig);
  // Tokenize13aLine joins with single ASCII spaces.
  auto split = [](std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t end = s.find(' ', pos);
      if (end == std::string_view::npos) end = s.size();
      out.push_back(s.substr(pos, end - pos));
      pos = end + 1;
    }
    return out;
  };
  const auto ht = split(h);
  const auto rt = split(r);
  std::vector<std::uint32_t> hid;
  std::vector<std::uint32_t> rid;
  internal::InternTokens(ht, rt, hid, rid);
  const auto counts = internal::MatchNgrams(hid, rid, kBleuMaxOrder);
  BleuStats st;
  st.hyp_len = static_cast<std::int64_t>(ht.size());
  st.ref_len = static_cast<std::int64_t>(rt.size());
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    st.correct[n] = counts[n].match;
    st.total[n] = counts[n].hyp;
  }
  return st;
}

BleuDetail ComputeBleu(const BleuStats& stats, Smoothing smoothing) {
  BleuDetail d;
  d.stats = stats;
  if (stats.hyp_len < stats.ref_len) {
    d.brevity_penalty =
        stats.hyp_len > 0 ? std::exp(1.0 - static_cast<double>(stats.ref_len) / static_cast<double>(stats.hyp_len))
                          : 0.0;
  } else {
    d.brevity_penalty = 1.0;
  }
  bool any_correct = false;
  for (auto c : stats.correct) any_correct = any_correct || c != 0;
  if (!any_correct) return d;

  double smooth = 1.0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    if (stats.total[n] == 0) break;
    if (stats.correct[n] == 0 && smoothing == Smoothing::kExp) {
      smooth *= 2;
      d.precisions[n] = 100.0 / (smooth * static_cast<double>(stats.total[n]));
    } else {
      d.precisions[n] = 100.0 * static_cast<double>(stats.correct[n]) / static_cast<double>(stats.total[n]);
    }
  }
  double sum = 0;
  for (double p : d.precisions) sum += LogOrFloor(p);
  d.score = d.brevity_penalty * std::exp(sum / kBleuMaxOrder);
  return d;
}

BleuDetail BleuCorpusDetail(std::span<const std::string> hyps, std::span<const std::string> refs,
                            const MetricSignature& sig, unsigned threads) {
  CheckCorpus(hyps.size(), refs.size());
  ValidateSignature(sig);
  const std::size_t chunks = std::min<std::size_t>(hyps.size(), 256);
  std::vector<BleuStats> partial(chunks);
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = hyps.size() * c / chunks;
    const std::size_t end = hyps.size() * (c + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) partial[c] += BleuSegmentStats(hyps[i], refs[i], sig);
  }, 1);
  BleuStats total;
  for (const auto& p : partial) total += p;
  return ComputeBleu(total, sig.smoothing);
}

MetricScore Bleu(std::span<const std::string> hyps, std::span<const std::string> refs, const MetricSignature& sig,
                 unsigned threads) {
  const BleuDetail d = BleuCorpusDetail(hyps, refs, sig, threads);
  return MetricScore{Metric::kBleu, d.score, sig.ToString(), hyps.size()};
}

}  // namespace locmt::metrics
