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


#include "locmt/corpus/typography.h"

#include <vector>

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"
#include "locmt/locfile/placeholder.h"

namespace locmt::corpus {
namespace {

constexpr char32_t kEllipsis = U'…';
constexpr char32_t kOpenGuillemet = U'«';
constexpr char32_t kCloseGuillemet = U'»';
constexpr char32_t kRightSingle = U'’';
constexpr char32_t kNbsp = unicode::kNoBreakSpace;
constexpr char32_t kNnbsp = unicode::kNarrowNoBreakSpace;

bool IsDoubleQuote(char32_t c) { return c == U'“' || c == U'”' || c == U'„'; }
bool IsSingleQuote(char32_t c) { return c == U'‘' || c == kRightSingle; }
bool IsHighMark(char32_t c) { return c == '?' || c == '!' || c == ':' || c == ';'; }
bool IsInlineSpace(char32_t c) { return c == ' ' || c == '\t' || c == kNbsp || c == kNnbsp; }
bool IsAsciiDigit(char32_t c) { return c >= '0' && c <= '9'; }

class Writer {
 public:
  void Push(char32_t c, bool frozen = false) {
    out_.push_back(c);
    frozen_.push_back(frozen);
  }
  void PopSpaces() {
    while (!out_.empty() && !frozen_.back() && IsInlineSpace(out_.back())) {
      out_.pop_back();
      frozen_.pop_back();
    }
  }
  bool Empty() const { return out_.empty(); }
  char32_t Back() const { return out_.back(); }
  bool BackFrozen() const { return frozen_.back(); }
  const std::u32string& Text() const { return out_; }

 private:
  std::u32string out_;
  std::vector<bool> frozen_;
};

}  // namespace

TypographyRules TypographyRules::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "typography rules must be an object");
  TypographyRules r;
  for (const auto& [k, v] : j.items()) {
    bool* slot = nullptr;
    if (k == "ellipsis") slot = &r.ellipsis;
    else if (k == "quotes") slot = &r.quotes;
    else if (k == "apostrophe") slot = &r.apostrophe;
    else if (k == "collapse_spaces") slot = &r.collapse_spaces;
    else if (k == "trim") slot = &r.trim;
    else if (k == "french_spacing") slot = &r.french_spacing;
    if (slot == nullptr) throw Error(ErrorCode::kInvalidConfig, "unknown typography rule '" + k + "'");
    if (!v.is_boolean()) throw Error(ErrorCode::kInvalidConfig, "typography rule '" + k + "' must be true or false");
    *slot = v.get<bool>();
  }
  return r;
}

bool IsFrench(std::string_view lang) {
  if (lang.size() < 2) return false;
  const bool fr = (lang[0] == 'f' || lang[0] == 'F') && (lang[1] == 'r' || lang[1] == 'R');
  return fr && (lang.size() == 2 || lang[2] == '-' || lang[2] == '_');
}

std::string NormalizeTypography(std::string_view text, std::string_view lang, const TypographyRules& rules) {
  if (rules.trim) text = unicode::Strip(text);
  const bool french = IsFrench(lang);
  const bool spacing = french && rules.french_spacing;
  const auto spans = locfile::ExtractPlaceholders(text);

  Writer w;
  bool quote_open = false;  // French: the next straight quote closes
  bool skip_spaces = false;

  auto emit = [&](char32_t c) {
    if (spacing && c == kCloseGuillemet) {
      w.PopSpaces();
      if (!w.Empty()) w.Push(kNbsp);
      w.Push(c);
      return;
    }
    w.Push(c);
    if (spacing && c == kOpenGuillemet) {
      w.Push(kNbsp);
      skip_spaces = true;
    }
  };

  auto run = [&](std::u32string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      char32_t c = s[i];
      const char32_t next = i + 1 < s.size() ? s[i + 1] : 0;
      if (skip_spaces) {
        if (IsInlineSpace(c)) continue;
        skip_spaces = false;
      }
      if (rules.ellipsis && c == '.' && next == '.' && i + 2 < s.size() && s[i + 2] == '.') {
        emit(kEllipsis);
        i += 2;
        continue;
      }
      if (rules.quotes) {
        if (french) {
          if (c == U'“' || c == U'„') c = kOpenGuillemet;
          else if (c == U'”') c = kCloseGuillemet;
          else if (c == '"') c = quote_open ? kCloseGuillemet : kOpenGuillemet;
          if (c == kOpenGuillemet) quote_open = true;
          if (c == kCloseGuillemet) quote_open = false;
        } else {
          if (IsDoubleQuote(c) || c == kOpenGuillemet || c == kCloseGuillemet) c = '"';
          else if (IsSingleQuote(c)) c = '\'';
        }
      }
      if (french && rules.apostrophe && c == '\'' && !w.Empty() && !w.BackFrozen() && unicode::IsLetter(w.Back()) &&
          unicode::IsLetter(next)) {
        c = kRightSingle;
      }
      if (rules.collapse_spaces && c == ' ' && !w.Empty() && !w.BackFrozen() && w.Back() == ' ') continue;
      if (spacing && IsHighMark(c)) {
        const bool url = c == ':' && next == '/' && i + 2 < s.size() && s[i + 2] == '/';
        const bool clock = c == ':' && !w.Empty() && IsAsciiDigit(w.Back()) && IsAsciiDigit(next);
        if (!url && !clock) {
          w.PopSpaces();
          if (!w.Empty() && w.Back() == kOpenGuillemet) {
            w.Push(kNbsp);
          } else if (!w.Empty() && !(IsHighMark(w.Back()) && !w.BackFrozen())) {
            w.Push(kNnbsp);
          }
        }
      }
      emit(c);
    }
  };

  std::size_t pos = 0;
  for (const auto& span : spans) {
    run(unicode::Decode(text.substr(pos, span.start - pos)));
    for (char32_t c : unicode::Decode(span.literal)) w.Push(c, true);
    skip_spaces = false;
    pos = span.end;
  }
  run(unicode::Decode(text.substr(pos)));

  std::string out = unicode::Encode(w.Text());
  if (rules.trim) return std::string(unicode::Strip(out));
  return out;
}

std::string NeutralKey(std::string_view text) {
  std::u32string out;
  bool skip_spaces = false;
  auto pop_space = [&] {
    if (!out.empty() && out.back() == ' ') out.pop_back();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t c = unicode::DecodeNext(text, pos);
    if (unicode::IsSpace(c)) {
      if (!skip_spaces && !out.empty() && out.back() != ' ') out.push_back(' ');
      continue;
    }
    skip_spaces = false;
    if (c == kOpenGuillemet) {
      out.push_back('"');
      skip_spaces = true;
    } else if (c == kCloseGuillemet) {
      pop_space();
      out.push_back('"');
    } else if (IsDoubleQuote(c)) {
      out.push_back('"');
    } else if (IsSingleQuote(c)) {
      out.push_back('\'');
    } else if (c == kEllipsis) {
      out.append(U"...");
    } else if (IsHighMark(c)) {
      pop_space();
      out.push_back(c);
    } else {
      out.push_back(c);
    }
  }
  pop_space();
  return unicode::Encode(out);
}

}  // namespace locmt::corpus
