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


#ifndef LOCMT_CORPUS_TYPOGRAPHY_H_
#define LOCMT_CORPUS_TYPOGRAPHY_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace locmt::corpus {

// Every rule can be switched off. Placeholders are copied unchanged.
//
//   ellipsis         `...` becomes `…`
//   quotes           English: `“ ” „ « »` become `"` and `‘ ’` become `'`.
//                    French: `“ ” „` become guillemets and straight `"`
//                    alternate between `«` and `»`.
//   apostrophe       French only: `'` between two letters becomes `’`.
//   collapse_spaces  runs of ASCII spaces become one space
//   trim             leading and trailing whitespace is removed
//   french_spacing   French only: U+202F before `? ! : ;` (not after another
//                    of these marks, not in `12:30` or `://`), U+00A0 after
//                    `«` and before `»`. Existing spaces there are replaced.
struct TypographyRules {
  bool ellipsis = true;
  bool quotes = true;
  bool apostrophe = true;
  bool collapse_spaces = true;
  bool trim = true;
  bool french_spacing = true;

  // Keys as above; unknown keys are Error(kInvalidConfig).
  static TypographyRules FromJson(const nlohmann::json& j);
};

// `fr`, `fr-CA`, `fr_FR`, case-insensitive.
bool IsFrench(std::string_view lang);

// Idempotent for any fixed rule set.
std::string NormalizeTypography(std::string_view text, std::string_view lang, const TypographyRules& rules = {});

// Language-neutral comparison key: line breaks and all Unicode whitespace
// runs become one space, spaces next to `« »` and before `? ! : ;` go, all
// double quotes become `"`, single quotes `'`, `…` becomes `...`, and the
// ends are trimmed. Case is kept.
std::string NeutralKey(std::string_view text);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_TYPOGRAPHY_H_
