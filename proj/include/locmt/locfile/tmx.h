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


#ifndef LOCMT_LOCFILE_TMX_H_
#define LOCMT_LOCFILE_TMX_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locmt/common/error.h"
#include "locmt/locfile/entry.h"

namespace locmt::locfile {

struct TmxDocument {
  std::string version;  // "1.4" or "1.4b"
  Meta header;          // header attributes and header-level props
  std::vector<TranslationUnit> units;
  // Skipped units (kMissingVariant) and unknown elements (kUnknownElement).
  std::vector<Diagnostic> diagnostics;
};

// Reads a TMX 1.4/1.4b document.
//
// Units map as follows: `tuid` is the key of both entries (a tuv-level
// `x-key` prop overrides it for one side); the variant whose language equals
// the tu or header `srclang` is the source, otherwise the first variant;
// tu-level props go to both entries' meta except `x-origin`, which becomes
// the unit origin; tuv-level props go to that entry's meta. Inline elements
// inside `seg` contribute their character data. A `tu` without two
// variants in distinct languages is skipped and reported.
//
// Throws Error(kMalformedXml) with line and column, Error(kUnsupportedVersion).
TmxDocument ParseTmx(std::string_view bytes);

// Writes a TMX 1.4 document. `header_meta` keys that are header attributes
// (creationtool, segtype, adminlang, srclang, datatype, ...) override the
// defaults; other keys become header props.
//
// Throws Error(kInvalidUnit) naming the unit index when a unit has an empty
// key or language, equal languages, text that is not valid UTF-8 or holds
// characters XML 1.0 cannot carry, or meta using the reserved `x-key` name.
std::string WriteTmx(std::span<const TranslationUnit> units, const Meta& header_meta = {});

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_TMX_H_
