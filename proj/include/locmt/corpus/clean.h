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


#ifndef LOCMT_CORPUS_CLEAN_H_
#define LOCMT_CORPUS_CLEAN_H_

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/common/error.h"
#include "locmt/corpus/filter.h"
#include "locmt/corpus/segment.h"
#include "locmt/corpus/typography.h"

namespace locmt::corpus {

struct CleanReport {
  std::size_t input_count = 0;
  std::size_t removed_duplicates = 0;
  std::size_t removed_empty = 0;
  std::size_t removed_untranslated = 0;
  std::size_t removed_by_filter = 0;
  std::size_t output_count = 0;

  bool Balanced() const {
    return output_count + removed_duplicates + removed_empty + removed_untranslated + removed_by_filter ==
           input_count;
  }
  nlohmann::json ToJson() const;
  friend bool operator==(const CleanReport&, const CleanReport&) = default;
};

struct CleanOptions {
  // Applied after the three removal passes.
  MetaFilter filter;
  unsigned threads = 0;
};

struct CleanResult {
  std::vector<BiSegment> segments;
  CleanReport report;
  std::vector<Diagnostic> diagnostics;
};

// Removes, in order: segments empty on either side after trimming,
// segments whose source and target share a NeutralKey, and repeated
// (source, target) NeutralKey pairs after the first. Survivors keep their
// order and content.
CleanResult Clean(std::vector<BiSegment> segments, const CleanOptions& options = {});

// Replaces CR, LF and CRLF with a space, applies NormalizeTypography to both
// sides with their own language and rehashes.
void NormalizeSegment(BiSegment& seg, const TypographyRules& rules = {});
void NormalizeSegments(std::vector<BiSegment>& segments, const TypographyRules& rules = {}, unsigned threads = 0);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_CLEAN_H_
