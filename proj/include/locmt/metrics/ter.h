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


#ifndef LOCMT_METRICS_TER_H_
#define LOCMT_METRICS_TER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locmt/metrics/score.h"
#include "locmt/metrics/signature.h"

namespace locmt::metrics {

// Edit counts of one segment, named from the hypothesis side as tercom does:
// an insertion is a hypothesis word with no reference counterpart, a
// deletion a reference word missing from the hypothesis.
struct TerAlignment {
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;
  std::int64_t shifts = 0;
  std::int64_t ref_length = 0;

  std::int64_t edits() const { return insertions + deletions + substitutions + shifts; }
  // edits / ref_length; 0 when both are 0 and 1 for edits against an empty
  // reference.
  double Rate() const;

  friend bool operator==(const TerAlignment&, const TerAlignment&) = default;
};

struct TerResult {
  MetricScore score;
  std::vector<TerAlignment> alignments;
  std::int64_t total_edits = 0;
  std::int64_t total_ref_length = 0;
};

// Tercom tokenization: rstrip, lowercase unless `c:mixed`, optional western
// normalisation (`nr:yes`), optional removal of `.,?:;!"()` (`pn:no`), then
// whitespace split.
std::vector<std::string> TercomTokenize(std::string_view text, const MetricSignature& sig);

// References go through the tokenizer twice, as in the 2.0.0 reference
// scorer. This only matters with `nr:yes`, where normalisation is not
// idempotent (`don's. x` -> `don's . x` -> `don 's . x`).
std::vector<std::string> TercomTokenizeReference(std::string_view text, const MetricSignature& sig);

// Greedy tercom TER between two token sequences: block shifts of at most 10
// words over at most 50 positions are applied while the best one strictly
// lowers the beam edit distance, up to 1000 evaluated shift candidates.
TerAlignment TerSegmentIds(std::span<const std::uint32_t> hyp, std::span<const std::uint32_t> ref);
TerAlignment TerSegmentTokens(std::span<const std::string> hyp, std::span<const std::string> ref);

// Throws Error(kLengthMismatch), Error(kEmptyCorpus), or Error(kEmptyRef)
// when every reference is empty. Segments with an empty reference count their
// hypothesis words as insertions and add 0 to the reference length.
TerResult Ter(std::span<const std::string> hyps, std::span<const std::string> refs,
              const MetricSignature& sig = MetricSignature::Ter(), unsigned threads = 1);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_TER_H_
