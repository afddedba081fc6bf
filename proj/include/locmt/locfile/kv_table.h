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


#ifndef LOCMT_LOCFILE_KV_TABLE_H_
#define LOCMT_LOCFILE_KV_TABLE_H_

#include <string_view>
#include <vector>

#include "locmt/common/error.h"
#include "locmt/locfile/entry.h"

namespace locmt::locfile {

enum class TableFormat { kTsv, kCsv };

struct TableRow {
  std::vector<std::string> cells;
  std::size_t line = 0;  // 1-based line the row starts on
};

// Rows of a TSV or CSV file with the cell rules of ParseKvTable. No header
// handling and no encoding check.
std::vector<TableRow> ParseTableRows(std::string_view bytes, TableFormat format);

struct KvTable {
  std::vector<RawEntry> entries;
  // Rows that were skipped: kRaggedRow (column count other than 2) or
  // kMalformedTable (empty key).
  std::vector<Diagnostic> diagnostics;
};

// Two-column key/text table. The first row is a header when its second cell
// reads "text" in any case. TSV cells unescape `\t`, `\n`, `\r` and `\\`;
// CSV follows RFC 4180 (quoted cells may hold commas, quotes as `""`, and
// line breaks). Blank lines are ignored. Every entry gets `lang` and a copy
// of `meta`.
//
// Throws Error(kEncodingError) for invalid UTF-8 and Error(kMalformedTable)
// for an unterminated CSV quote.
KvTable ParseKvTable(std::string_view bytes, TableFormat format, std::string_view lang, const Meta& meta = {});

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_KV_TABLE_H_
