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


#ifndef LOCMT_CORPUS_SPLIT_H_
#define LOCMT_CORPUS_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locmt/corpus/segment.h"

namespace locmt::corpus {

// Name of the shuffle generator. Part of the output contract: a different
// generator or draw procedure must get a new name.
inline constexpr std::string_view kShuffleName = "splitmix64-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      const std::uint64_t r = Next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates from the last index down, swapping i with Below(i + 1).
template <typename T>
void SeededShuffle(std::vector<T>& v, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.Below(i));
    std::swap(v[i - 1], v[j]);
  }
}

struct SplitSpec {
  std::size_t valid_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;
  // meta key and value a segment must carry to be eligible for valid or test.
  std::optional<std::pair<std::string, std::string>> scope;
};

struct SplitResult {
  std::vector<BiSegment> train;
  std::vector<BiSegment> valid;
  std::vector<BiSegment> test;
};

// Eligible segments are shuffled; the first test_size go to test, the next
// valid_size to valid, in shuffled order. Train keeps input order. Ids must be
// unique (Error(kDuplicateKey) otherwise); too few eligible segments is
// Error(kInsufficientEligible).
SplitResult Split(const std::vector<BiSegment>& segments, const SplitSpec& spec);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_SPLIT_H_
