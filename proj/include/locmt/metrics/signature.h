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


#ifndef LOCMT_METRICS_SIGNATURE_H_
#define LOCMT_METRICS_SIGNATURE_H_

#include <string>
#include <string_view>

namespace locmt::metrics {

enum class Metric { kBleu, kChrF2pp, kTer };
enum class CaseMode { kMixed, kLower };
enum class Tokenizer { k13a, kTercom, kNone };

// BLEU: kExp (mteval smoothing) or kNone.
// chrF: kEps adds epsilon to undefined precision/recall terms and averages F
// over every order (signature `e:no`); kNone averages precision and recall
// over the orders that have n-grams on both sides (signature `e:yes`).
enum class Smoothing { kExp, kEps, kNone };

// Version of the scoring semantics. Scores carry this string so that numbers
// produced by different releases are never compared silently.
inline constexpr std::string_view kMetricSemanticsVersion = "2.0.0";

struct MetricSignature {
  Metric metric = Metric::kBleu;
  CaseMode case_mode = CaseMode::kMixed;
  Tokenizer tokenizer = Tokenizer::k13a;
  Smoothing smoothing = Smoothing::kExp;
  int char_order = 0;
  int word_order = 0;
  double beta = 0;
  // TER only: apply tercom western normalisation (`nr`).
  bool normalized = false;
  // TER only: keep punctuation (`pn:yes`); false strips `.,?:;!"()`.
  bool punctuation = true;
  std::string version{kMetricSemanticsVersion};

  static MetricSignature Bleu();
  static MetricSignature ChrF2pp();
  static MetricSignature Ter();
  static MetricSignature Default(Metric metric);

  // sacreBLEU-style `key:value|...` string, e.g.
  // `#:1|c:mixed|e:no|tok:13a|s:exp|v:2.0.0`.
  std::string ToString() const;

  friend bool operator==(const MetricSignature&, const MetricSignature&) = default;
};

std::string_view MetricName(Metric metric);
Metric ParseMetricName(std::string_view name);

// Applies one `key=value` override (keys: case, smooth, nc, nw, beta, nr, pn)
// to `sig`. Throws Error(kUnsupportedSignature) on unknown keys or values.
void ApplySignatureOverride(MetricSignature& sig, std::string_view key, std::string_view value);

// Throws Error(kUnsupportedSignature) for combinations the scorers cannot
// honour (e.g. BLEU with epsilon smoothing).
void ValidateSignature(const MetricSignature& sig);

}  // namespace locmt::metrics

#endif  // LOCMT_METRICS_SIGNATURE_H_
