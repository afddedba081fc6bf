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


#ifndef LOCMT_METRICS_COMPARE_H_
#define LOCMT_METRICS_COMPARE_H_

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/metrics/score.h"
#include "locmt/metrics/signature.h"

namespace locmt::metrics {

struct SystemOutput {
  std::string name;
  std::vector<std::string> hyps;
};

// Rows are ordered by BLEU, best first; ties keep input order.
struct ComparisonReport {
  std::vector<ScoreReport> rows;
  std::vector<MetricSignature> signatures;  // BLEU, chrF2++, TER

  nlohmann::json ToJson() const;
  // Fixed-width table, headers carry the metric direction (BLEU↑ chrF2++↑
  // TER↓), followed by one signature line per metric.
  std::string ToText() const;

  // Reads a report written by ToJson() (or a hand-written one with the same
  // shape) without recomputing any score. Throws Error(kInvalidArgument).
  static ComparisonReport FromJson(const nlohmann::json& j);
};

// Scores every system with BLEU, chrF2++ and TER.
// Throws Error(kLengthMismatch), Error(kEmptyCorpus), Error(kEmptyRef).
ComparisonReport Compare(const std::vector<SystemOutput>& systems, const std::vector<std::string>& refs,
                         const std::vector<MetricSignature>& signatures = {MetricSignature::Bleu(),
                                                                          MetricSignature::ChrF2pp(),
                                                                          MetricSignature::Ter()},
                         unsigned threads = 1);

void SortByBleu(std::vector<ScoreReport>& rows);

// "↑" for BLEU and chrF2++, "↓" for TER.
std::string_view MetricArrow(Metric metric);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_COMPARE_H_
