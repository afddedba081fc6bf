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


#include "locmt/locfile/bitext.h"

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"

namespace locmt::locfile {

Bitext WriteBitext(std::span<const TranslationUnit> units) {
  Bitext out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (const std::string* t : {&units[i].source.text, &units[i].target.text}) {
      if (t->find_first_of("\r\n") != std::string::npos) {
        throw Error(ErrorCode::kEmbeddedNewline, "unit " + std::to_string(i) + " holds a line break");
      }
    }
    out.source += units[i].source.text;
    out.source += '\n';
    out.target += units[i].target.text;
    out.target += '\n';
  }
  return out;
}

std::vector<std::string> SplitLines(std::string_view bytes) {
  bytes = unicode::StripBom(bytes);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view l = bytes.substr(pos, end - pos);
    if (!l.empty() && l.back() == '\r' && end < bytes.size()) l.remove_suffix(1);
    out.emplace_back(l);
    pos = end + 1;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> ReadBitext(std::string_view source, std::string_view target) {
  std::vector<std::string> s = SplitLines(source);
  std::vector<std::string> t = SplitLines(target);
  if (s.size() != t.size()) {
    throw Error(ErrorCode::kSegmentCountMismatch,
                std::to_string(s.size()) + " source lines vs " + std::to_string(t.size()) + " target lines");
  }
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(std::move(s[i]), std::move(t[i]));
  return out;
}

}  // namespace locmt::locfile
