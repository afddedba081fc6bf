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


#include "locmt/locfile/align.h"

#include <unordered_map>

#include "locmt/common/error.h"

namespace locmt::locfile {
namespace {

std::unordered_map<std::string_view, std::size_t> IndexByKey(std::span<const RawEntry> entries, const char* side) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [it, inserted] = index.emplace(entries[i].key, i);
    if (!inserted) {
      const RawEntry& first = entries[it->second];
      throw Error(ErrorCode::kDuplicateKey, std::string(side) + " key '" + entries[i].key + "' on lines " +
                                                std::to_string(first.line) + " and " + std::to_string(entries[i].line));
    }
  }
  return index;
}

}  // namespace

KeyAlignment AlignByKey(std::span<const RawEntry> src, std::span<const RawEntry> tgt, std::string_view origin) {
  IndexByKey(src, "source");
  const auto tgt_index = IndexByKey(tgt, "target");
  KeyAlignment out;
  std::vector<bool> used(tgt.size(), false);
  for (const RawEntry& s : src) {
    const auto it = tgt_index.find(s.key);
    if (it == tgt_index.end()) {
      out.orphans.push_back(s);
      continue;
    }
    used[it->second] = true;
    out.units.push_back(TranslationUnit{s, tgt[it->second], std::string(origin)});
  }
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    if (!used[i]) out.orphans.push_back(tgt[i]);
  }
  return out;
}

}  // namespace locmt::locfile
