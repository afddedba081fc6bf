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


#ifndef LOCMT_METRICS_TOKENIZER_13A_H_
#define LOCMT_METRICS_TOKENIZER_13A_H_

#include <string>
#include <string_view>
#include <vector>

namespace locmt::metrics {

// mteval-v13a tokenization as used for BLEU scoring: removes `<skipped>`
// markers, joins hyphenated line breaks, decodes the four XML entities, pads
// symbols with spaces, splits `.`/`,` unless they sit between digits, splits
// `-` after a digit and collapses whitespace. Case is preserved.
//
// Returns the tokens joined by single spaces.
std::string Tokenize13aLine(std::string_view text);

std::vector<std::string> Tokenize13a(std::string_view text);

// Token count of Tokenize13a(text) without materialising the tokens.
std::size_t Count13aTokens(std::string_view text);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_TOKENIZER_13A_H_
