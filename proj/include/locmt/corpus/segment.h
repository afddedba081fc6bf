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


#ifndef LOCMT_CORPUS_SEGMENT_H_
#define LOCMT_CORPUS_SEGMENT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "locmt/locfile/entry.h"

namespace locmt::corpus {

using Meta = locfile::Meta;

// FNV-1a 64 over the length-prefixed source, target, source language and
// target language. Meta does not take part.
std::uint64_t SegmentId(std::string_view source, std::string_view target, std::string_view source_lang,
                        std::string_view target_lang);

struct BiSegment {
  std::string source_text;
  std::string target_text;
  std::string source_lang;
  std::string target_lang;
  Meta meta;
  std::uint64_t id = 0;

  // Recomputes id from the current texts and languages.
  void Rehash() { id = SegmentId(source_text, target_text, source_lang, target_lang); }

  friend bool operator==(const BiSegment&, const BiSegment&) = default;
};

BiSegment MakeSegment(std::string source, std::string target, std::string source_lang, std::string target_lang,
                      Meta meta = {});

// Source meta, then target meta for keys the source lacks, plus `key` and,
// when set, `origin`.
BiSegment SegmentFromUnit(const locfile::TranslationUnit& unit);

// 16 lowercase hex digits.
std::string FormatId(std::uint64_t id);
std::uint64_t ParseId(std::string_view hex);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_SEGMENT_H_
