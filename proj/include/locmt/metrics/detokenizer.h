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


#ifndef LOCMT_METRICS_DETOKENIZER_H_
#define LOCMT_METRICS_DETOKENIZER_H_

#include <string>
#include <string_view>

namespace locmt::metrics {

// Rejoins space-separated tokens in the manner of the Moses detokenizer.
// Closing punctuation attaches to the left, opening brackets to the right,
// straight double quotes alternate between opening and closing, elided forms
// such as `l'` attach to the next word and English clitics (`'s`, `n't`) to
// the previous one. `@-@` joins hyphenated words. For French (`fr`, `fr-*`)
// `? ! : ;` get a narrow no-break space before them and guillemets get
// no-break spaces inside.
std::string Detokenize(std::string_view text, std::string_view lang);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_DETOKENIZER_H_
