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


#ifndef LOCMT_CORPUS_STATS_H_
#define LOCMT_CORPUS_STATS_H_

#include <cstdint>
#include <span>

#include <nlohmann/json.hpp>

#include "locmt/corpus/segment.h"

namespace locmt::corpus {

// Token counts use the 13a tokenizer on each side.
struct CorpusStats {
  std::uint64_t sentences = 0;
  std::uint64_t src_tokens = 0;
  std::uint64_t tgt_tokens = 0;

  CorpusStats& operator+=(const CorpusStats& o) {
    sentences += o.sentences;
    src_tokens += o.src_tokens;
    tgt_tokens += o.tgt_tokens;
    return *this;
  }
  friend CorpusStats operator+(CorpusStats a, const CorpusStats& b) { return a += b; }
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;

  nlohmann::json ToJson() const;
};

CorpusStats ComputeStats(std::span<const BiSegment> segments, unsigned threads = 0);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_STATS_H_
