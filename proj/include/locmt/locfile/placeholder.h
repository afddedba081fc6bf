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


#ifndef LOCMT_LOCFILE_PLACEHOLDER_H_
#define LOCMT_LOCFILE_PLACEHOLDER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace locmt::locfile {

enum class PlaceholderKind { kTag, kVariable };

std::string_view PlaceholderKindName(PlaceholderKind kind);

struct PlaceholderSpan {
  std::size_t start = 0;  // byte offset
  std::size_t end = 0;    // exclusive
  PlaceholderKind kind = PlaceholderKind::kTag;
  std::string literal;

  friend bool operator==(const PlaceholderSpan&, const PlaceholderSpan&) = default;
};

struct LiteralPattern {
  std::string literal;
  PlaceholderKind kind = PlaceholderKind::kVariable;
};

// Tags are `<...>` or `[...]` of at most `max_tag_bytes` bytes whose body is
// non-empty and holds no bracket of either kind and no line break.
// Variables are `%s %d %i %u %f %%` and `%{identifier}`. Extra literals are
// matched verbatim. At each position the longest match wins.
struct PlaceholderGrammar {
  std::size_t max_tag_bytes = 64;
  std::vector<LiteralPattern> extra_literals;
};

std::vector<PlaceholderSpan> ExtractPlaceholders(std::string_view text, const PlaceholderGrammar& grammar = {});

// Literals of the spans, in order.
std::vector<std::string> PlaceholderLiterals(std::string_view text, const PlaceholderGrammar& grammar = {});

}  // namespace locmt::locfile

#endif  // LOCMT_LOCFILE_PLACEHOLDER_H_
