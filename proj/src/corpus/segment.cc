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


#include "locmt/corpus/segment.h"

#include <charconv>

#include "locmt/common/error.h"

namespace locmt::corpus {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void Mix(std::uint64_t& h, std::string_view s) {
  std::uint64_t n = s.size();
  for (int i = 0; i < 8; ++i) {
    h ^= (n >> (8 * i)) & 0xFF;
    h *= kFnvPrime;
  }
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t SegmentId(std::string_view source, std::string_view target, std::string_view source_lang,
                        std::string_view target_lang) {
  std::uint64_t h = kFnvOffset;
  Mix(h, source);
  Mix(h, target);
  Mix(h, source_lang);
  Mix(h, target_lang);
  return h;
}

BiSegment MakeSegment(std::string source, std::string target, std::string source_lang, std::string target_lang,
                      Meta meta) {
  BiSegment s{std::move(source), std::move(target), std::move(source_lang), std::move(target_lang), std::move(meta), 0};
  s.Rehash();
  return s;
}

BiSegment SegmentFromUnit(const locfile::TranslationUnit& unit) {
  Meta meta = unit.source.meta;
  for (const auto& [k, v] : unit.target.meta) meta.emplace(k, v);
  meta["key"] = unit.source.key;
  if (!unit.origin.empty()) meta["origin"] = unit.origin;
  return MakeSegment(unit.source.text, unit.target.text, unit.source.lang, unit.target.lang, std::move(meta));
}

std::string FormatId(std::uint64_t id) {
  char buf[17];
  static const char kHex[] = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = kHex[id & 0xF];
    id >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

std::uint64_t ParseId(std::string_view hex) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), out, 16);
  if (hex.size() != 16 || ec != std::errc() || ptr != hex.data() + hex.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad segment id '" + std::string(hex) + "'");
  }
  return out;
}

}  // namespace locmt::corpus
