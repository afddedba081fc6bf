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


#ifndef LOCMT_COMMON_UNICODE_H_
#define LOCMT_COMMON_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers shared by every module. All text in locmt is UTF-8 encoded
// std::string; offsets are byte offsets unless stated otherwise.
namespace locmt::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;
inline constexpr char32_t kNoBreakSpace = 0x00A0;
inline constexpr char32_t kNarrowNoBreakSpace = 0x202F;
inline constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed input yields U+FFFD and advances by one byte.
char32_t DecodeNext(std::string_view s, std::size_t& pos);

bool IsValidUtf8(std::string_view s);
std::u32string Decode(std::string_view s);
void AppendUtf8(char32_t c, std::string& out);
std::string Encode(std::u32string_view s);
std::size_t CodePointCount(std::string_view s);

// Whitespace as defined by Python's str.isspace(); the reference scorer
// splits on exactly this set, including U+00A0 and U+202F.
bool IsSpace(char32_t c);
std::vector<std::string_view> SplitWhitespace(std::string_view s);
std::string_view StripRight(std::string_view s);
std::string_view Strip(std::string_view s);

// Full Unicode lowercase mapping (root locale), including context-sensitive
// rules such as final sigma.
std::string ToLower(std::string_view s);

// Simple (1:1) case folding, suitable for offset-preserving comparisons.
char32_t FoldCase(char32_t c);
char32_t ToUpperSimple(char32_t c);

bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsAlnum(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);

// Returns `s` without a leading UTF-8 byte order mark.
std::string_view StripBom(std::string_view s);

}  // namespace locmt::unicode

#endif  // LOCMT_COMMON_UNICODE_H_
