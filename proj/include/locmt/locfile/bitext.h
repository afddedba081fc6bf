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


#ifndef LOCMT_LOCFILE_BITEXT_H_
#define LOCMT_LOCFILE_BITEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locmt/locfile/entry.h"

namespace locmt::locfile {

struct Bitext {
  std::string source;  // one segment per LF-terminated line
  std::string target;
};

// Throws Error(kEmbeddedNewline) naming the unit index when a text holds CR
// or LF.
Bitext WriteBitext(std::span<const TranslationUnit> units);

// Inverse of WriteBitext. Throws Error(kSegmentCountMismatch) when the line
// counts differ.
std::vector<std::pair<std::string, std::string>> ReadBitext(std::string_view source, std::string_view target);

// Lines of a file: split on LF, a trailing LF does not start a new line, a
// CR before LF is dropped, a leading BOM is stripped.
std::vector<std::string> SplitLines(std::string_view bytes);

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_BITEXT_H_
