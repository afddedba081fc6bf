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


#include "locmt/corpus/split.h"

#include <unordered_map>

#include "locmt/common/error.h"

namespace locmt::corpus {

SplitResult Split(const std::vector<BiSegment>& segments, const SplitSpec& spec) {
  std::unordered_map<std::uint64_t, std::size_t> first;
  first.reserve(segments.size());
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto [it, fresh] = first.emplace(segments[i].id, i);
    if (!fresh) {
      throw Error(ErrorCode::kDuplicateKey, "segments " + std::to_string(it->second + 1) + " and " +
                                                std::to_string(i + 1) + " share id " + FormatId(segments[i].id) +
                                                "; deduplicate before splitting");
    }
    if (spec.scope) {
      const auto m = segments[i].meta.find(spec.scope->first);
      if (m == segments[i].meta.end() || m->second != spec.scope->second) continue;
    }
    eligible.push_back(i);
  }
  const std::size_t needed = spec.valid_size + spec.test_size;
  if (needed > eligible.size()) {
    throw Error(ErrorCode::kInsufficientEligible, "split needs " + std::to_string(needed) + " eligible segments, " +
                                                      std::to_string(eligible.size()) + " available");
  }

  SeededShuffle(eligible, spec.seed);
  std::vector<char> held(segments.size(), 0);
  SplitResult out;
  out.test.reserve(spec.test_size);
  out.valid.reserve(spec.valid_size);
  for (std::size_t k = 0; k < needed; ++k) {
    const std::size_t i = eligible[k];
    held[i] = 1;
    (k < spec.test_size ? out.test : out.valid).push_back(segments[i]);
  }
  out.train.reserve(segments.size() - needed);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!held[i]) out.train.push_back(segments[i]);
  }
  return out;
}

}  // namespace locmt::corpus
