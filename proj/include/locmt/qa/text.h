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


#ifndef LOCMT_QA_TEXT_H_
#define LOCMT_QA_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace locmt::qa {

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

// Words are runs of letters and digits with inner apostrophes (' or ’).
// A French elided article or pronoun (l', d', qu', t', ...) is split off as
// its own word so that `l'épée` yields `l'` and `épée`.
std::vector<Span> SplitWords(std::string_view text);

// Occurrences of `term` in `text`, left to right and non-overlapping. A match
// that starts or ends with a letter or digit must not touch another letter
// or digit on that side; an apostrophe counts as a boundary. Case-insensitive
// matching uses simple case folding.
std::vector<Span> FindTerm(std::string_view text, std::string_view term, bool case_sensitive);

bool StartsUpper(std::string_view word);
// At least two uppercase letters and no lowercase letter.
bool IsAllCapsWord(std::string_view word);
std::string Fold(std::string_view s);

}  // namespace locmt::qa

#endif  // LOCMT_QA_TEXT_H_
