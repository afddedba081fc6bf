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


#include "locmt/locfile/placeholder.h"

namespace locmt::locfile {
namespace {

bool IdentStart(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool IdentChar(char c) { return IdentStart(c) || (c >= '0' && c <= '9'); }

// Length of a tag starting at `i`, or 0.
std::size_t MatchTag(std::string_view t, std::size_t i, std::size_t max_bytes) {
  const char open = t[i];
  if (open != '<' && open != '[') return 0;
  const char close = open == '<' ? '>' : ']';
  for (std::size_t j = i + 1; j < t.size() && j - i + 1 <= max_bytes; ++j) {
    const char c = t[j];
    if (c == close) return j > i + 1 ? j - i + 1 : 0;
    if (c == '<' || c == '>' || c == '[' || c == ']' || c == '\n' || c == '\r') return 0;
  }
  return 0;
}

std::size_t MatchVariable(std::string_view t, std::size_t i) {
  if (t[i] != '%' || i + 1 >= t.size()) return 0;
  const char c = t[i + 1];
  if (c == 's' || c == 'd' || c == 'i' || c == 'u' || c == 'f' || c == '%') return 2;
  if (c == '{' && i + 2 < t.size() && IdentStart(t[i + 2])) {
    std::size_t j = i + 3;
    while (j < t.size() && IdentChar(t[j])) ++j;
    if (j < t.size() && t[j] == '}') return j - i + 1;
  }
  return 0;
}

}  // namespace

std::string_view PlaceholderKindName(PlaceholderKind kind) {
  return kind == PlaceholderKind::kTag ? "tag" : "variable";
}

std::vector<PlaceholderSpan> ExtractPlaceholders(std::string_view text, const PlaceholderGrammar& grammar) {
  std::vector<PlaceholderSpan> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = 0;
    PlaceholderKind kind = PlaceholderKind::kTag;
    if (const std::size_t n = MatchTag(text, i, grammar.max_tag_bytes); n > best) {
      best = n;
      kind = PlaceholderKind::kTag;
    }
    if (const std::size_t n = MatchVariable(text, i); n > best) {
      best = n;
      kind = PlaceholderKind::kVariable;
    }
    for (const auto& p : grammar.extra_literals) {
      if (!p.literal.empty() && p.literal.size() > best && text.substr(i, p.literal.size()) == p.literal) {
        best = p.literal.size();
        kind = p.kind;
      }
    }
    if (best == 0) {
      ++i;
      continue;
    }
    out.push_back({i, i + best, kind, std::string(text.substr(i, best))});
    i += best;
  }
  return out;
}

std::vector<std::string> PlaceholderLiterals(std::string_view text, const PlaceholderGrammar& grammar) {
  std::vector<std::string> out;
  for (auto& s : ExtractPlaceholders(text, grammar)) out.push_back(std::move(s.literal));
  return out;
}

}  // namespace locmt::locfile
