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


#include "locmt/locfile/kv_table.h"

#include <string>

#include "locmt/common/unicode.h"

namespace locmt::locfile {
namespace {

std::string UnescapeTsv(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      switch (s[i + 1]) {
        case 't': out += '\t'; ++i; continue;
        case 'n': out += '\n'; ++i; continue;
        case 'r': out += '\r'; ++i; continue;
        case '\\': out += '\\'; ++i; continue;
        default: break;
      }
    }
    out += s[i];
  }
  return out;
}

std::vector<TableRow> TsvRows(std::string_view s) {
  std::vector<TableRow> rows;
  std::size_t pos = 0;
  std::size_t line = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('\n', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view l = s.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.empty()) continue;
    TableRow r;
    r.line = line;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = l.find('\t', start);
      if (tab == std::string_view::npos) {
        r.cells.push_back(UnescapeTsv(l.substr(start)));
        break;
      }
      r.cells.push_back(UnescapeTsv(l.substr(start, tab - start)));
      start = tab + 1;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<TableRow> CsvRows(std::string_view s) {
  std::vector<TableRow> rows;
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos < s.size()) {
    TableRow r;
    r.line = line;
    std::string cell;
    bool row_done = false;
    bool any = false;
    while (!row_done) {
      cell.clear();
      if (pos < s.size() && s[pos] == '"') {
        const std::size_t open_line = line;
        ++pos;
        while (true) {
          if (pos >= s.size()) {
            throw Error(ErrorCode::kMalformedTable, "line " + std::to_string(open_line) + ": unterminated quote");
          }
          if (s[pos] == '"') {
            if (pos + 1 < s.size() && s[pos + 1] == '"') {
              cell += '"';
              pos += 2;
              continue;
            }
            ++pos;
            break;
          }
          if (s[pos] == '\n') ++line;
          cell += s[pos++];
        }
        // Text between the closing quote and the next separator is kept.
        while (pos < s.size() && s[pos] != ',' && s[pos] != '\n') {
          if (!(s[pos] == '\r' && (pos + 1 == s.size() || s[pos + 1] == '\n'))) cell += s[pos];
          ++pos;
        }
        any = true;
      } else {
        while (pos < s.size() && s[pos] != ',' && s[pos] != '\n') cell += s[pos++];
        if (!cell.empty() && cell.back() == '\r' && (pos == s.size() || s[pos] == '\n')) cell.pop_back();
        any = any || !cell.empty();
      }
      r.cells.push_back(cell);
      if (pos >= s.size()) {
        row_done = true;
      } else if (s[pos] == ',') {
        ++pos;
        any = true;
        if (pos == s.size()) {
          r.cells.emplace_back();
          row_done = true;
        }
      } else {
        ++pos;  // '\n'
        ++line;
        row_done = true;
      }
    }
    if (any) rows.push_back(std::move(r));
  }
  return rows;
}

bool IsHeaderCell(std::string_view s) {
  if (s.size() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    const char c = s[i] >= 'A' && s[i] <= 'Z' ? static_cast<char>(s[i] - 'A' + 'a') : s[i];
    if (c != "text"[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<TableRow> ParseTableRows(std::string_view bytes, TableFormat format) {
  bytes = unicode::StripBom(bytes);
  return format == TableFormat::kTsv ? TsvRows(bytes) : CsvRows(bytes);
}

KvTable ParseKvTable(std::string_view bytes, TableFormat format, std::string_view lang, const Meta& meta) {
  bytes = unicode::StripBom(bytes);
  if (!unicode::IsValidUtf8(bytes)) {
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
      const std::size_t before = pos;
      // Invalid input decodes to U+FFFD and advances a single byte.
      if (unicode::DecodeNext(bytes, pos) == unicode::kReplacementChar && pos - before == 1) break;
      if (bytes[before] == '\n') ++line;
    }
    throw Error(ErrorCode::kEncodingError, "line " + std::to_string(line) + ": invalid UTF-8");
  }
  const std::vector<TableRow> rows = format == TableFormat::kTsv ? TsvRows(bytes) : CsvRows(bytes);
  KvTable out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& r = rows[i];
    if (i == 0 && r.cells.size() >= 2 && IsHeaderCell(r.cells[1])) continue;
    if (r.cells.size() != 2) {
      out.diagnostics.push_back({ErrorCode::kRaggedRow,
                                 "expected 2 columns, found " + std::to_string(r.cells.size()) + "; row skipped",
                                 r.line});
      continue;
    }
    if (r.cells[0].empty()) {
      out.diagnostics.push_back({ErrorCode::kMalformedTable, "empty key; row skipped", r.line});
      continue;
    }
    RawEntry e;
    e.key = r.cells[0];
    e.text = r.cells[1];
    e.lang = std::string(lang);
    e.meta = meta;
    e.line = r.line;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace locmt::locfile
