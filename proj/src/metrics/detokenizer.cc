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


#include "locmt/metrics/detokenizer.h"

#include <vector>

#include "locmt/common/unicode.h"

namespace locmt::metrics {
namespace {

constexpr std::string_view kNbsp = "\xC2\xA0";
constexpr std::string_view kNnbsp = "\xE2\x80\xAF";

bool IsFrench(std::string_view lang) {
  return lang.size() >= 2 && (lang.substr(0, 2) == "fr" || lang.substr(0, 2) == "FR") &&
         (lang.size() == 2 || lang[2] == '-' || lang[2] == '_');
}

bool OneOf(std::string_view tok, std::initializer_list<std::string_view> set) {
  for (auto s : set) {
    if (tok == s) return true;
  }
  return false;
}

bool IsApostrophe(std::string_view s) { return s == "'" || s == "’"; }

bool EndsWithApostrophe(std::string_view t) {
  return (t.size() > 1 && t.back() == '\'') || (t.size() > 3 && t.substr(t.size() - 3) == "’");
}

bool StartsWithApostrophe(std::string_view t) {
  return (t.size() > 1 && t.front() == '\'') || (t.size() > 3 && t.substr(0, 3) == "’");
}

bool LastIsLetter(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = s.size() - 1;
  while (pos > 0 && (static_cast<unsigned char>(s[pos]) & 0xC0) == 0x80) --pos;
  std::size_t p = pos;
  return unicode::IsAlnum(unicode::DecodeNext(s, p));
}

}  // namespace

std::string Detokenize(std::string_view text, std::string_view lang) {
  const bool fr = IsFrench(lang);
  const std::vector<std::string_view> toks = unicode::SplitWhitespace(text);
  std::string out;
  bool glue_next = true;  // no separator before the next token
  bool quote_open = false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string_view t = toks[i];
    if (t == "@-@") {
      out += '-';
      glue_next = true;
      continue;
    }
    std::string_view sep = glue_next ? "" : " ";
    bool glue_after = false;
    if (fr && OneOf(t, {"?", "!", ":", ";"})) {
      const bool after_mark = !out.empty() && std::string_view("?!:;").find(out.back()) != std::string_view::npos;
      sep = glue_next || after_mark ? "" : kNnbsp;
      if (!glue_next && out.empty()) sep = "";
    } else if (OneOf(t, {",", ".", "?", "!", ":", ";", "%", ")", "]", "}", "...", "…"})) {
      sep = "";
    } else if (OneOf(t, {"(", "[", "{"})) {
      glue_after = true;
    } else if (t == "\"") {
      if (quote_open) {
        sep = "";
      } else {
        glue_after = true;
      }
      quote_open = !quote_open;
    } else if (t == "«") {
      glue_after = true;
      if (fr) {
        out += sep;
        out += t;
        out += kNbsp;
        glue_next = true;
        continue;
      }
    } else if (t == "»") {
      sep = fr && !out.empty() ? kNbsp : "";
    } else if (IsApostrophe(t)) {
      sep = "";
      glue_after = true;
    } else if ((StartsWithApostrophe(t) || t == "n't") && LastIsLetter(out)) {
      sep = "";
    }
    if (EndsWithApostrophe(t) && LastIsLetter(t.substr(0, t.size() - (t.back() == '\'' ? 1 : 3)))) {
      glue_after = true;
    }
    if (out.empty()) sep = "";
    out += sep;
    out += t;
    glue_next = glue_after;
  }
  return out;
}

}  // namespace locmt::metrics
