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


#ifndef LOCMT_CORPUS_FILTER_H_
#define LOCMT_CORPUS_FILTER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locmt/common/error.h"
#include "locmt/corpus/segment.h"

namespace locmt::corpus {

// A segment is excluded when any meta pair matches or its source has more
// 13a tokens than the limit. An empty filter excludes nothing.
struct MetaFilter {
  std::vector<std::pair<std::string, std::string>> exclude_meta;
  std::optional<std::size_t> max_source_tokens;

  bool empty() const { return exclude_meta.empty() && !max_source_tokens; }
};

// Accepts `key=value` and `src_tokens>N`. Throws Error(kInvalidArgument).
void AddFilterExpression(MetaFilter& filter, std::string_view expr);

struct FilterResult {
  std::vector<BiSegment> segments;
  std::size_t removed = 0;
  // kUnknownMetaKey for each filter key no input segment carries.
  std::vector<Diagnostic> diagnostics;
};

FilterResult FilterMeta(std::vector<BiSegment> segments, const MetaFilter& filter, unsigned threads = 0);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_FILTER_H_
