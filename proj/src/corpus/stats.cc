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


#include "locmt/corpus/stats.h"

#include <algorithm>
#include <vector>

#include "locmt/common/parallel.h"
#include "locmt/metrics/tokenizer_13a.h"

namespace locmt::corpus {

nlohmann::json CorpusStats::ToJson() const {
  return {{"sentences", sentences}, {"src_tokens", src_tokens}, {"tgt_tokens", tgt_tokens}};
}

CorpusStats ComputeStats(std::span<const BiSegment> segments, unsigned threads) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (segments.size() + kChunk - 1) / kChunk;
  std::vector<CorpusStats> partial(chunks);
  ParallelFor(
      chunks, threads,
      [&](std::size_t c) {
        const std::size_t end = std::min(segments.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          partial[c].sentences += 1;
          partial[c].src_tokens += metrics::Count13aTokens(segments[i].source_text);
          partial[c].tgt_tokens += metrics::Count13aTokens(segments[i].target_text);
        }
      },
      1);
  CorpusStats total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace locmt::corpus
