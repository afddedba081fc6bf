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


#ifndef LOCMT_METRICS_CHRF_H_
#define LOCMT_METRICS_CHRF_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locmt/metrics/score.h"
#include "locmt/metrics/signature.h"

namespace locmt::metrics {

// Per-order [hyp, ref, match] counts: character orders 1..nc first, then
// word orders 1..nw. `hyp` is zeroed for an order where the reference has no
// n-grams.
struct ChrFStats {
  struct Order {
    std::int64_t hyp = 0;
    std::int64_t ref = 0;
    std::int64_t match = 0;
    friend bool operator==(const Order&, const Order&) = default;
  };
  std::vector<Order> orders;

  ChrFStats& operator+=(const ChrFStats& o);
  friend bool operator==(const ChrFStats&, const ChrFStats&) = default;
};

// Words for the word n-gram part: whitespace split, then one trailing (or,
// failing that, one leading) ASCII punctuation character is split off each
// word longer than one character.
std::vector<std::string_view> ChrFWords(std::string_view text);

ChrFStats ChrFSegmentStats(std::string_view hyp, std::string_view ref, const MetricSignature& sig);

// F-score on the 0-100 scale from aggregated statistics.
double ChrFFromStats(const ChrFStats& stats, const MetricSignature& sig);

// Throws Error(kLengthMismatch) or Error(kEmptyCorpus).
MetricScore ChrF(std::span<const std::string> hyps, std::span<const std::string> refs,
                 const MetricSignature& sig = MetricSignature::ChrF2pp(), unsigned threads = 1);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_CHRF_H_
