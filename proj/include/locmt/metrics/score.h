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


#ifndef LOCMT_METRICS_SCORE_H_
#define LOCMT_METRICS_SCORE_H_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/metrics/signature.h"

namespace locmt::metrics {

// One corpus-level metric value. `value` is kept at full precision; rounding
// happens only when a report is rendered.
struct MetricScore {
  Metric metric = Metric::kBleu;
  double value = 0;
  std::string signature;
  std::size_t segment_count = 0;
};

struct ScoreReport {
  std::string system_name;
  std::vector<MetricScore> scores;
  std::size_t segment_count = 0;

  // nullptr when the metric was not computed.
  const MetricScore* Find(Metric metric) const;

  nlohmann::json ToJson() const;
  std::string ToText() const;
};

// Rounds half away from zero to two decimals. The decision is taken on the
// shortest decimal representation of `value`, so 0.125 rounds to 0.13 even
// though the binary double is slightly below it.
double RoundHalfUp2(double value);

// RoundHalfUp2 formatted with exactly two decimals, e.g. "37.14".
std::string FormatScore(double value);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_SCORE_H_
