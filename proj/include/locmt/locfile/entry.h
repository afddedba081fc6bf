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


#ifndef LOCMT_LOCFILE_ENTRY_H_
#define LOCMT_LOCFILE_ENTRY_H_

#include <cstddef>
#include <map>
#include <string>

namespace locmt::locfile {

using Meta = std::map<std::string, std::string>;

// One string of a game localisation file.
struct RawEntry {
  std::string key;
  std::string text;  // exactly as stored, whitespace included
  std::string lang;
  Meta meta;
  // 1-based line of the row or element it came from; 0 if synthetic. Not
  // part of equality.
  std::size_t line = 0;

  friend bool operator==(const RawEntry& a, const RawEntry& b) {
    return a.key == b.key && a.text == b.text && a.lang == b.lang && a.meta == b.meta;
  }
};

struct TranslationUnit {
  RawEntry source;
  RawEntry target;
  std::string origin;  // manifest entry id

  friend bool operator==(const TranslationUnit&, const TranslationUnit&) = default;
};

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_ENTRY_H_
