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


#include "locmt/metrics/signature.h"

#include <charconv>

#include "locmt/common/error.h"

namespace locmt::metrics {
namespace {

const char* YesNo(bool b) { return b ? "yes" : "no"; }

bool ParseBool(std::string_view v) {
  if (v == "yes" || v == "true" || v == "1") return true;
  if (v == "no" || v == "false" || v == "0") return false;
  throw Error(ErrorCode::kUnsupportedSignature, "expected yes/no, got '" + std::string(v) + "'");
}

int ParseInt(std::string_view v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || out < 0) {
    throw Error(ErrorCode::kUnsupportedSignature, "expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

}  // namespace

MetricSignature MetricSignature::Bleu() {
  MetricSignature s;
  s.metric = Metric::kBleu;
  s.case_mode = CaseMode::kMixed;
  s.tokenizer = Tokenizer::k13a;
  s.smoothing = Smoothing::kExp;
  s.word_order = 4;
  return s;
}

MetricSignature MetricSignature::ChrF2pp() {
  MetricSignature s;
  s.metric = Metric::kChrF2pp;
  s.case_mode = CaseMode::kMixed;
  s.tokenizer = Tokenizer::kNone;
  s.smoothing = Smoothing::kNone;
  s.char_order = 6;
  s.word_order = 2;
  s.beta = 2;
  return s;
}

MetricSignature MetricSignature::Ter() {
  MetricSignature s;
  s.metric = Metric::kTer;
  s.case_mode = CaseMode::kLower;
  s.tokenizer = Tokenizer::kTercom;
  s.smoothing = Smoothing::kNone;
  s.normalized = false;
  s.punctuation = true;
  return s;
}

MetricSignature MetricSignature::Default(Metric metric) {
  switch (metric) {
    case Metric::kBleu: return Bleu();
    case Metric::kChrF2pp: return ChrF2pp();
    case Metric::kTer: return Ter();
  }
  return Bleu();
}

std::string MetricSignature::ToString() const {
  const std::string c = case_mode == CaseMode::kMixed ? "mixed" : "lc";
  std::string out = "#:1|c:" + c + "|";
  switch (metric) {
    case Metric::kBleu:
      out += "e:no|tok:13a|s:";
      out += smoothing == Smoothing::kExp ? "exp" : "none";
      break;
    case Metric::kChrF2pp:
      out += "e:";
      out += YesNo(smoothing != Smoothing::kEps);
      out += "|nc:" + std::to_string(char_order) + "|nw:" + std::to_string(word_order) + "|s:no";
      break;
    case Metric::kTer:
      out += "t:tercom|nr:";
      out += YesNo(normalized);
      out += "|pn:";
      out += YesNo(punctuation);
      out += "|a:no";
      break;
  }
  out += "|v:" + version;
  return out;
}

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kBleu: return "BLEU";
    case Metric::kChrF2pp: return "chrF2++";
    case Metric::kTer: return "TER";
  }
  return "?";
}

Metric ParseMetricName(std::string_view name) {
  if (name == "BLEU" || name == "bleu") return Metric::kBleu;
  if (name == "chrF2++" || name == "chrf" || name == "chrf++" || name == "chrF") return Metric::kChrF2pp;
  if (name == "TER" || name == "ter") return Metric::kTer;
  throw Error(ErrorCode::kUnsupportedSignature, "unknown metric '" + std::string(name) + "'");
}

void ApplySignatureOverride(MetricSignature& sig, std::string_view key, std::string_view value) {
  if (key == "case" || key == "c") {
    if (value == "mixed") {
      sig.case_mode = CaseMode::kMixed;
    } else if (value == "lc" || value == "lower") {
      sig.case_mode = CaseMode::kLower;
    } else {
      throw Error(ErrorCode::kUnsupportedSignature, "case must be mixed or lc");
    }
  } else if (key == "smooth" || key == "s") {
    if (value == "exp") {
      sig.smoothing = Smoothing::kExp;
    } else if (value == "eps") {
      sig.smoothing = Smoothing::kEps;
    } else if (value == "none") {
      sig.smoothing = Smoothing::kNone;
    } else {
      throw Error(ErrorCode::kUnsupportedSignature, "smooth must be exp, eps or none");
    }
  } else if (key == "nc") {
    sig.char_order = ParseInt(value);
  } else if (key == "nw") {
    sig.word_order = ParseInt(value);
  } else if (key == "beta") {
    sig.beta = ParseInt(value);
  } else if (key == "nr") {
    sig.normalized = ParseBool(value);
  } else if (key == "pn") {
    sig.punctuation = ParseBool(value);
  } else {
    throw Error(ErrorCode::kUnsupportedSignature, "unknown signature key '" + std::string(key) + "'");
  }
  ValidateSignature(sig);
}

void ValidateSignature(const MetricSignature& sig) {
  switch (sig.metric) {
    case Metric::kBleu:
      if (sig.smoothing == Smoothing::kEps) {
        throw Error(ErrorCode::kUnsupportedSignature, "BLEU supports smoothing exp or none");
      }
      if (sig.word_order != 4) {
        throw Error(ErrorCode::kUnsupportedSignature, "BLEU n-gram order is fixed at 4");
      }
      break;
    case Metric::kChrF2pp:
      if (sig.smoothing == Smoothing::kExp) {
        throw Error(ErrorCode::kUnsupportedSignature, "chrF supports smoothing eps or none");
      }
      if (sig.char_order < 1 || sig.beta <= 0) {
        throw Error(ErrorCode::kUnsupportedSignature, "chrF needs nc >= 1 and beta > 0");
      }
      break;
    case Metric::kTer:
      if (sig.smoothing != Smoothing::kNone) {
        throw Error(ErrorCode::kUnsupportedSignature, "TER takes no smoothing");
      }
      break;
  }
}

}  // namespace locmt::metrics
