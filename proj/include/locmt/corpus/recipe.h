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


#ifndef LOCMT_CORPUS_RECIPE_H_
#define LOCMT_CORPUS_RECIPE_H_

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace locmt::corpus {

inline constexpr std::string_view kRecipeSchemaVersion = "locmt.recipe/1";

// Transformer-base settings. Emitted for an external toolkit, never used here.
struct NmtRecipe {
  int vocab_size = 32000;
  int encoder_layers = 6;
  int decoder_layers = 6;
  int attention_heads = 8;
  int model_dim = 512;
  int ffn_dim = 2048;
  double dropout = 0.1;
  int train_steps = 200000;
  int beam_size = 5;

  nlohmann::json ToJson() const;
  friend bool operator==(const NmtRecipe&, const NmtRecipe&) = default;
};

// Values are JSON numbers or their text. Unknown names are
// Error(kUnknownField); bad values Error(kInvalidConfig).
void ApplyRecipeOverride(NmtRecipe& recipe, std::string_view field, const nlohmann::json& value);
NmtRecipe EmitRecipe(const nlohmann::json& overrides = nlohmann::json::object());
NmtRecipe EmitRecipe(const std::map<std::string, std::string>& overrides);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_RECIPE_H_
