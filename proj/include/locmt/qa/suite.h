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


#ifndef LOCMT_QA_SUITE_H_
#define LOCMT_QA_SUITE_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/corpus/segment.h"
#include "locmt/qa/config.h"
#include "locmt/qa/finding.h"

namespace locmt::qa {

struct QaReport {
  std::vector<QaFinding> findings;
  std::array<std::size_t, kCategoryCount> counts{};

  std::size_t Count(Category c) const { return counts[static_cast<std::size_t>(c)]; }
  nlohmann::json SummaryJson() const;
  // Category table followed by per-severity totals.
  std::string SummaryText() const;
};

// Runs the enabled checks. Segments without the conversation key take no
// part in the register check. Findings are ordered by segment position, then
// category, then the order each check produced them.
QaReport RunSuite(const std::vector<corpus::BiSegment>& segments, const QaConfig& config, unsigned threads = 0);

// Adds manual findings, resolving their position from segment_id.
// Unknown ids are Error(kInvalidArgument).
void AddAnnotations(QaReport& report, const std::vector<corpus::BiSegment>& segments,
                    std::vector<QaFinding> annotations);

}  // namespace locmt::qa

#endif  // LOCMT_QA_SUITE_H_
