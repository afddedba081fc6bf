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


#ifndef LOCMT_SRC_METRICS_NGRAM_MATCH_H_
#define LOCMT_SRC_METRICS_NGRAM_MATCH_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace locmt::metrics::internal {

struct NgramCounts {
  std::int64_t hyp = 0;    // n-grams in the hypothesis
  std::int64_t ref = 0;    // n-grams in the reference
  std::int64_t match = 0;  // clipped matches: sum of min(hyp count, ref count)
};

// Maps the tokens of both sides onto dense integer ids (equal strings share
// an id). Ids are only meaningful within one call.
inline void InternTokens(std::span<const std::string_view> hyp, std::span<const std::string_view> ref,
                         std::vector<std::uint32_t>& hyp_ids, std::vector<std::uint32_t>& ref_ids) {
  std::vector<std::string_view> vocab;
  vocab.reserve(hyp.size() + ref.size());
  vocab.insert(vocab.end(), hyp.begin(), hyp.end());
  vocab.insert(vocab.end(), ref.begin(), ref.end());
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
  auto id_of = [&](std::string_view tok) {
    return static_cast<std::uint32_t>(std::lower_bound(vocab.begin(), vocab.end(), tok) - vocab.begin());
  };
  hyp_ids.clear();
  ref_ids.clear();
  for (auto t : hyp) hyp_ids.push_back(id_of(t));
  for (auto t : ref) ref_ids.push_back(id_of(t));
}

// Counts n-gram matches of orders 1..max_order between two symbol sequences.
// N-grams are identified exactly: the rank of an n-gram is derived from the
// rank of its (n-1)-gram prefix and its last symbol, so no hashing is involved.
inline std::vector<NgramCounts> MatchNgrams(std::span<const std::uint32_t> hyp,
                                            std::span<const std::uint32_t> ref, int max_order) {
  std::vector<NgramCounts> out(static_cast<std::size_t>(std::max(max_order, 0)));
  std::vector<std::uint64_t> hyp_rank(hyp.begin(), hyp.end());
  std::vector<std::uint64_t> ref_rank(ref.begin(), ref.end());
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> hs;
  std::vector<std::uint64_t> rs;
  for (int n = 1; n <= max_order; ++n) {
    const std::size_t nh = hyp.size() >= static_cast<std::size_t>(n) ? hyp.size() - n + 1 : 0;
    const std::size_t nr = ref.size() >= static_cast<std::size_t>(n) ? ref.size() - n + 1 : 0;
    if (n > 1) {
      // Re-rank (prefix rank, last symbol) pairs for both sides jointly.
      keys.clear();
      for (std::size_t i = 0; i < nh; ++i) keys.push_back((hyp_rank[i] << 32) | hyp[i + n - 1]);
      for (std::size_t i = 0; i < nr; ++i) keys.push_back((ref_rank[i] << 32) | ref[i + n - 1]);
      std::vector<std::uint64_t> uniq = keys;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      auto rank_of = [&](std::uint64_t k) {
        return static_cast<std::uint64_t>(std::lower_bound(uniq.begin(), uniq.end(), k) - uniq.begin());
      };
      hyp_rank.resize(nh);
      ref_rank.resize(nr);
      for (std::size_t i = 0; i < nh; ++i) hyp_rank[i] = rank_of(keys[i]);
      for (std::size_t i = 0; i < nr; ++i) ref_rank[i] = rank_of(keys[nh + i]);
    }
    hs.assign(hyp_rank.begin(), hyp_rank.begin() + static_cast<std::ptrdiff_t>(nh));
    rs.assign(ref_rank.begin(), ref_rank.begin() + static_cast<std::ptrdiff_t>(nr));
    std::sort(hs.begin(), hs.end());
    std::sort(rs.begin(), rs.end());
    NgramCounts& c = out[static_cast<std::size_t>(n - 1)];
    c.hyp = static_cast<std::int64_t>(nh);
    c.ref = static_cast<std::int64_t>(nr);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < hs.size() && j < rs.size()) {
      if (hs[i] < rs[j]) {
        ++i;
      } else if (rs[j] < hs[i]) {
        ++j;
      } else {
        const std::uint64_t v = hs[i];
        std::int64_t ch = 0;
        std::int64_t cr = 0;
        while (i < hs.size() && hs[i] == v) ++i, ++ch;
        while (j < rs.size() && rs[j] == v) ++j, ++cr;
        c.match += std::min(ch, cr);
      }
    }
  }
  return out;
}

}  // namespace locmt::metrics::internal

#endif  // LOCMT_SRC_METRICS_NGRAM_MATCH_H_
