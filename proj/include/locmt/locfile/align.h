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


#ifndef LOCMT_LOCFILE_ALIGN_H_
#define LOCMT_LOCFILE_ALIGN_H_

#include <span>
#include <string_view>
#include <vector>

#include "locmt/locfile/entry.h"

namespace locmt::locfile {

struct KeyAlignment {
  std::vector<TranslationUnit> units;  // in source order
  std::vector<RawEntry> orphans;       // unmatched source entries, then target
};

// Exact inner join on key. 2 * units + orphans == |src| + |tgt|.
// Throws Error(kDuplicateKey) naming the side, the key and both lines.
KeyAlignment AlignByKey(std::span<const RawEntry> src, std::span<const RawEntry> tgt, std::string_view origin = "");

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_ALIGN_H_
