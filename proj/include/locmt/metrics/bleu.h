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


#ifndef LOCMT_METRICS_BLEU_H_
#define LOCMT_METRICS_BLEU_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "locmt/metrics/score.h"
#include "locmt/metrics/signature.h"

namespace locmt::metrics {

inline constexpr int kBleuMaxOrder = 4;

// Sufficient statistics of corpus BLEU. Summing them is associative and
// commutative, so corpus aggregation does not depend on segment order.
struct BleuStats {
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;
  std::array<std::int64_t, kBleuMaxOrder> correct{};
  std::array<std::int64_t, kBleuMaxOrder> total{};

  BleuStats& operator+=(const BleuStats& o);
  friend bool operator==(const BleuStats&, const BleuStats&) = default;
};

struct BleuDetail {
  double score = 0;
  double brevity_penalty = 0;
  std::array<double, kBleuMaxOrder> precisions{};
  BleuStats stats;
};

// Statistics of one segment pair: rstrip, optional lowercasing, 13a tokens.
BleuStats BleuSegmentStats(std::string_view hyp, std::string_view ref, const MetricSignature& sig);

BleuDetail ComputeBleu(const BleuStats& stats, Smoothing smoothing);

// Corpus BLEU on the 0-100 scale.
// Throws Error(kLengthMismatch) or Error(kEmptyCorpus).
MetricScore Bleu(std::span<const std::string> hyps, std::span<const std::string> refs,
                 const MetricSignature& sig = MetricSignature::Bleu(), unsigned threads = 1);

BleuDetail BleuCorpusDetail(std::span<const std::string> hyps, std::span<const std::string> refs,
                            const MetricSignature& sig = MetricSignature::Bleu(), unsigned threads = 1);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_BLEU_H_
