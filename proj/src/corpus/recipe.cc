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


#include "locmt/corpus/recipe.h"

#include <charconv>
#include <cmath>

#include "locmt/common/error.h"

namespace locmt::corpus {
namespace {

double NumberOf(std::string_view field, const nlohmann::json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    double d = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return d;
  }
  throw Error(ErrorCode::kInvalidConfig, "recipe field '" + std::string(field) + "' needs a number");
}

int PositiveInt(std::string_view field, const nlohmann::json& value) {
  const double d = NumberOf(field, value);
  if (d != std::floor(d) || d < 1 || d > 2147483647.0) {
    throw Error(ErrorCode::kInvalidConfig, "recipe field '" + std::string(field) + "' needs a positive integer");
  }
  return static_cast<int>(d);
}

}  // namespace

nlohmann::json NmtRecipe::ToJson() const {
  nlohmann::json j;
  j["schema_version"] = kRecipeSchemaVersion;
  j["vocab_size"] = vocab_size;
  j["encoder_layers"] = encoder_layers;
  j["decoder_layers"] = decoder_layers;
  j["attention_heads"] = attention_heads;
  j["model_dim"] = model_dim;
  j["ffn_dim"] = ffn_dim;
  j["dropout"] = dropout;
  j["train_steps"] = train_steps;
  j["beam_size"] = beam_size;
  return j;
}

void ApplyRecipeOverride(NmtRecipe& r, std::string_view field, const nlohmann::json& value) {
  if (field == "dropout") {
    const double d = NumberOf(field, value);
    if (!(d >= 0 && d < 1)) throw Error(ErrorCode::kInvalidConfig, "dropout must be in [0, 1)");
    r.dropout = d;
    return;
  }
  int* slot = nullptr;
  if (field == "vocab_size") slot = &r.vocab_size;
  else if (field == "encoder_layers") slot = &r.encoder_layers;
  else if (field == "decoder_layers") slot = &r.decoder_layers;
  else if (field == "attention_heads") slot = &r.attention_heads;
  else if (field == "model_dim") slot = &r.model_dim;
  else if (field == "ffn_dim") slot = &r.ffn_dim;
  else if (field == "train_steps") slot = &r.train_steps;
  else if (field == "beam_size") slot = &r.beam_size;
  if (slot == nullptr) throw Error(ErrorCode::kUnknownField, "unknown recipe field '" + std::string(field) + "'");
  *slot = PositiveInt(field, value);
}

NmtRecipe EmitRecipe(const nlohmann::json& overrides) {
  if (!overrides.is_object()) throw Error(ErrorCode::kInvalidConfig, "recipe overrides must be an object");
  NmtRecipe r;
  for (const auto& [k, v] : overrides.items()) ApplyRecipeOverride(r, k, v);
  return r;
}

NmtRecipe EmitRecipe(const std::map<std::string, std::string>& overrides) {
  NmtRecipe r;
  for (const auto& [k, v] : overrides) ApplyRecipeOverride(r, k, v);
  return r;
}

}  // namespace locmt::corpus
