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


#include "locmt/corpus/filter.h"

#include <charconv>
#include <set>

#include "locmt/common/parallel.h"
#include "locmt/common/unicode.h"
#include "locmt/metrics/tokenizer_13a.h"

namespace locmt::corpus {

void AddFilterExpression(MetaFilter& filter, std::string_view expr) {
  expr = unicode::Strip(expr);
  constexpr std::string_view kTokens = "src_tokens>";
  if (expr.substr(0, kTokens.size()) == kTokens) {
    const std::string_view num = expr.substr(kTokens.size());
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad token limit in '" + std::string(expr) + "'");
    }
    filter.max_source_tokens = n;
    return;
  }
  const std::size_t eq = expr.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(ErrorCode::kInvalidArgument, "filter must be key=value or src_tokens>N, got '" + std::string(expr) + "'");
  }
  filter.exclude_meta.emplace_back(std::string(expr.substr(0, eq)), std::string(expr.substr(eq + 1)));
}

FilterResult FilterMeta(std::vector<BiSegment> segments, const MetaFilter& filter, unsigned threads) {
  FilterResult result;
  if (filter.empty()) {
    result.segments = std::move(segments);
    return result;
  }
  std::set<std::string> missing;
  if (!segments.empty()) {
    for (const auto& [k, v] : filter.exclude_meta) missing.insert(k);
    for (const auto& s : segments) {
      for (auto it = missing.begin(); it != missing.end();) {
        it = s.meta.count(*it) ? missing.erase(it) : std::next(it);
      }
      if (missing.empty()) break;
    }
  }
  for (const auto& k : missing) {
    result.diagnostics.push_back({ErrorCode::kUnknownMetaKey, "no segment carries meta key '" + k + "'", 0});
  }

  std::vector<char> drop(segments.size(), 0);
  ParallelFor(segments.size(), threads, [&](std::size_t i) {
    const BiSegment& s = segments[i];
    for (const auto& [k, v] : filter.exclude_meta) {
      const auto it = s.meta.find(k);
      if (it != s.meta.end() && it->second == v) {
        drop[i] = 1;
        return;
      }
    }
    if (filter.max_source_tokens && metrics::Count13aTokens(s.source_text) > *filter.max_source_tokens) drop[i] = 1;
  });
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (drop[i]) {
      ++result.removed;
    } else {
      result.segments.push_back(std::move(segments[i]));
    }
  }
  return result;
}

}  // namespace locmt::corpus
