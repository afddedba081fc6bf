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


#include "locmt/metrics/tokenizer_13a.h"

#include "locmt/common/unicode.h"

namespace locmt::metrics {
namespace {

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  if (s.find(from) == std::string::npos) return;
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(from, pos);
    if (hit == std::string::npos) break;
    out.append(s, pos, hit - pos);
    out.append(to);
    pos = hit + from.size();
  }
  out.append(s, pos, std::string::npos);
  s = std::move(out);
}

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

// The symbol class [{-~[-` -&(-+:-@/].
bool IsPaddedSymbol(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x7B && u <= 0x7E) || (u >= 0x5B && u <= 0x60) ||
         (u >= 0x20 && u <= 0x26) || (u >= 0x28 && u <= 0x2B) ||
         (u >= 0x3A && u <= 0x40) || u == '/';
}

// The substitutions below scan bytes. A multi-byte code point can only take
// part in a match through the byte adjacent to an ASCII `.`, `,` or `-`, so
// the results equal a code-point regex with non-overlapping replacement.
std::string PadSymbols(std::string_view s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (char c : s) {
    if (IsPaddedSymbol(c)) {
      out.push_back(' ');
      out.push_back(c);
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// ([^0-9])([\.,]) -> "\1 \2 "
std::string SplitPeriodCommaAfterNonDigit(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && !IsAsciiDigit(s[i]) && (s[i + 1] == '.' || s[i + 1] == ',')) {
      out.push_back(s[i]);
      out.push_back(' ');
      out.push_back(s[i + 1]);
      out.push_back(' ');
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// ([\.,])([^0-9]) -> " \1 \2"
std::string SplitPeriodCommaBeforeNonDigit(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && (s[i] == '.' || s[i] == ',') && !IsAsciiDigit(s[i + 1])) {
      out.push_back(' ');
      out.push_back(s[i]);
      out.push_back(' ');
      out.push_back(s[i + 1]);
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

// ([0-9])(-) -> "\1 \2 "
std::string SplitDashAfterDigit(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && IsAsciiDigit(s[i]) && s[i + 1] == '-') {
      out.push_back(s[i]);
      out.append(" - ");
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

std::string Pretokenize(std::string_view text) {
  std::string line(text);
  ReplaceAll(line, "<skipped>", "");
  ReplaceAll(line, "-\n", "");
  ReplaceAll(line, "\n", " ");
  if (line.find('&') != std::string::npos) {
    ReplaceAll(line, "&quot;", "\"");
    ReplaceAll(line, "&amp;", "&");
    ReplaceAll(line, "&lt;", "<");
    ReplaceAll(line, "&gt;", ">");
  }
  std::string padded;
  padded.reserve(line.size() + 2);
  padded.push_back(' ');
  padded.append(line);
  padded.push_back(' ');
  std::string s = PadSymbols(padded);
  s = SplitPeriodCommaAfterNonDigit(s);
  s = SplitPeriodCommaBeforeNonDigit(s);
  return SplitDashAfterDigit(s);
}

}  // namespace

std::string Tokenize13aLine(std::string_view text) {
  const std::string s = Pretokenize(text);
  std::string out;
  out.reserve(s.size());
  for (std::string_view tok : unicode::SplitWhitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(tok);
  }
  return out;
}

std::vector<std::string> Tokenize13a(std::string_view text) {
  const std::string s = Pretokenize(text);
  std::vector<std::string> out;
  for (std::string_view tok : unicode::SplitWhitespace(s)) out.emplace_back(tok);
  return out;
}

std::size_t Count13aTokens(std::string_view text) {
  return unicode::SplitWhitespace(Pretokenize(text)).size();
}

}  // namespace locmt::metrics
