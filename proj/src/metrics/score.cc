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


#include "locmt/metrics/score.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

namespace locmt::metrics {
namespace {

// Shortest round-trip fixed notation of |value|, split at the decimal point.
void ShortestDigits(double value, std::string& int_part, std::string& frac_part) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof(buf), std::fabs(value), std::chars_format::fixed);
  const std::string s(buf, res.ptr);
  const auto dot = s.find('.');
  int_part = s.substr(0, dot);
  frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
}

std::string RoundedString(double value) {
  if (!std::isfinite(value)) return fmt::format("{}", value);
  std::string ip;
  std::string fp;
  ShortestDigits(value, ip, fp);
  const bool round_up = fp.size() > 2 && fp[2] >= '5';
  fp.resize(2, '0');
  std::string digits = ip + fp;
  if (round_up) {
    int k = static_cast<int>(digits.size()) - 1;
    while (k >= 0 && digits[k] == '9') digits[k--] = '0';
    if (k < 0) {
      digits.insert(digits.begin(), '1');
    } else {
      ++digits[k];
    }
  }
  std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
  if (std::signbit(value) && out != "0.00") out.insert(out.begin(), '-');
  return out;
}

}  // namespace

double RoundHalfUp2(double value) { return std::strtod(RoundedString(value).c_str(), nullptr); }

std::string FormatScore(double value) { return RoundedString(value); }

const MetricScore* ScoreReport::Find(Metric metric) const {
  for (const auto& s : scores) {
    if (s.metric == metric) return &s;
  }
  return nullptr;
}

nlohmann::json ScoreReport::ToJson() const {
  nlohmann::json j;
  j["system"] = system_name;
  j["segments"] = segment_count;
  j["tool_version"] = LOCMT_VERSION;
  auto& arr = j["scores"] = nlohmann::json::array();
  for (const auto& s : scores) {
    arr.push_back({{"metric", std::string(MetricName(s.metric))},
                   {"score", RoundHalfUp2(s.value)},
                   {"text", FormatScore(s.value)},
                   {"signature", s.signature}});
  }
  return j;
}

std::string ScoreReport::ToText() const {
  std::ostringstream out;
  for (const auto& s : scores) {
    out << fmt::format("{:<8} {:>7}  {}\n", MetricName(s.metric), FormatScore(s.value), s.signature);
  }
  return out.str();
}

}  // namespace locmt::metrics
