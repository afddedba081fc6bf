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


#include "locmt/qa/text.h"

#include <array>

#include "locmt/common/unicode.h"

namespace locmt::qa {
namespace {

bool IsWordChar(char32_t c) { return unicode::IsAlnum(c); }
bool IsApostrophe(char32_t c) { return c == '\'' || c == U'’'; }

constexpr std::array<std::string_view, 13> kElisions = {"l",  "d",     "j",      "m",      "n",      "s",      "t",
                                                        "c",  "qu",    "jusqu",  "lorsqu", "puisqu", "quoiqu"};

bool IsElision(std::string_view prefix) {
  const std::string f = Fold(prefix);
  for (auto e : kElisions) {
    if (f == e) return true;
  }
  return false;
}

char32_t CodePointBefore(std::string_view s, std::size_t pos) {
  if (pos == 0) return 0;
  std::size_t p = pos - 1;
  while (p > 0 && (static_cast<unsigned char>(s[p]) & 0xC0) == 0x80) --p;
  return unicode::DecodeNext(s, p);
}

char32_t CodePointAt(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  return unicode::DecodeNext(s, pos);
}

}  // namespace

std::string Fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) unicode::AppendUtf8(unicode::FoldCase(unicode::DecodeNext(s, pos)), out);
  return out;
}

std::vector<Span> SplitWords(std::string_view text) {
  std::vector<Span> words;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  std::size_t last_end = 0;  // end of the last word character
  while (pos < text.size()) {
    const std::size_t here = pos;
    const char32_t c = unicode::DecodeNext(text, pos);
    if (IsWordChar(c)) {
      if (start == std::string_view::npos) start = here;
      last_end = pos;
      continue;
    }
    if (start != std::string_view::npos && IsApostrophe(c) && IsWordChar(CodePointAt(text, pos))) continue;
    if (start != std::string_view::npos) {
      words.push_back({start, last_end});
      start = std::string_view::npos;
    }
  }
  if (start != std::string_view::npos) words.push_back({start, last_end});

  std::vector<Span> out;
  out.reserve(words.size());
  for (Span w : words) {
    std::size_t p = w.start;
    while (p < w.end) {
      const std::size_t here = p;
      const char32_t c = unicode::DecodeNext(text, p);
      if (IsApostrophe(c)) {
        if (IsElision(text.substr(w.start, here - w.start))) {
          out.push_back({w.start, p});
          w.start = p;
        }
        break;
      }
    }
    out.push_back(w);
  }
  return out;
}

std::vector<Span> FindTerm(std::string_view text, std::string_view term, bool case_sensitive) {
  std::vector<Span> out;
  if (term.empty()) return out;
  std::string hay;
  std::string needle;
  std::vector<std::size_t> map;  // byte offset in hay -> byte offset in text
  if (case_sensitive) {
    hay.assign(text);
    needle.assign(term);
  } else {
    map.assign(1, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
      unicode::AppendUtf8(unicode::FoldCase(unicode::DecodeNext(text, pos)), hay);
      map.resize(hay.size() + 1, pos);
      map[hay.size()] = pos;
    }
    needle = Fold(term);
  }
  auto orig = [&](std::size_t i) { return case_sensitive ? i : map[i]; };
  const bool word_start = IsWordChar(CodePointAt(term, 0));
  const bool word_end = IsWordChar(CodePointBefore(term, term.size()));
  std::size_t from = 0;
  while (true) {
    const std::size_t hit = hay.find(needle, from);
    if (hit == std::string::npos) break;
    const std::size_t s = orig(hit);
    const std::size_t e = orig(hit + needle.size());
    const bool ok_start = !word_start || !IsWordChar(CodePointBefore(text, s));
    const bool ok_end = !word_end || !IsWordChar(CodePointAt(text, e));
    if (ok_start && ok_end) {
      out.push_back({s, e});
      from = hit + needle.size();
    } else {
      from = hit + 1;
    }
  }
  return out;
}

bool StartsUpper(std::string_view word) { return !word.empty() && unicode::IsUpper(CodePointAt(word, 0)); }

bool IsAllCapsWord(std::string_view word) {
  std::size_t upper = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char32_t c = unicode::DecodeNext(word, pos);
    if (unicode::IsLower(c)) return false;
    if (unicode::IsUpper(c)) ++upper;
  }
  return upper >= 2;
}

}  // namespace locmt::qa
