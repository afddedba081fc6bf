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


#include "locmt/metrics/compare.h"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"
#include "locmt/metrics/bleu.h"
#include "locmt/metrics/chrf.h"
#include "locmt/metrics/ter.h"

namespace locmt::metrics {
namespace {

double BleuOf(const ScoreReport& r) {
  const MetricScore* s = r.Find(Metric::kBleu);
  return s ? s->value : -1;
}

// Pads by display width in code points; the arrows are one column each.
std::string PadRight(const std::string& s, std::size_t width) {
  const std::size_t w = unicode::CodePointCount(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string PadLeft(const std::string& s, std::size_t width) {
  const std::size_t w = unicode::CodePointCount(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

const MetricSignature* FindSignature(const std::vector<MetricSignature>& sigs, Metric m) {
  for (const auto& s : sigs) {
    if (s.metric == m) return &s;
  }
  return nullptr;
}

}  // namespace

std::string_view MetricArrow(Metric metric) { return metric == Metric::kTer ? "↓" : "↑"; }

void SortByBleu(std::vector<ScoreReport>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScoreReport& a, const ScoreReport& b) { return BleuOf(a) > BleuOf(b); });
}

ComparisonReport Compare(const std::vector<SystemOutput>& systems, const std::vector<std::string>& refs,
                         const std::vector<MetricSignature>& signatures, unsigned threads) {
  ComparisonReport report;
  report.signatures = signatures;
  for (const auto& sys : systems) {
    ScoreReport row;
    row.system_name = sys.name;
    row.segment_count = sys.hyps.size();
    for (const auto& sig : signatures) {
      switch (sig.metric) {
        case Metric::kBleu: row.scores.push_back(Bleu(sys.hyps, refs, sig, threads)); break;
        case Metric::kChrF2pp: row.scores.push_back(ChrF(sys.hyps, refs, sig, threads)); break;
        case Metric::kTer: row.scores.push_back(Ter(sys.hyps, refs, sig, threads).score); break;
      }
    }
    report.rows.push_back(std::move(row));
  }
  SortByBleu(report.rows);
  return report;
}

nlohmann::json ComparisonReport::ToJson() const {
  nlohmann::json j;
  j["tool_version"] = LOCMT_VERSION;
  auto& sigs = j["signatures"] = nlohmann::json::object();
  for (const auto& s : signatures) sigs[std::string(MetricName(s.metric))] = s.ToString();
  auto& rows_json = j["systems"] = nlohmann::json::array();
  for (const auto& r : rows) rows_json.push_back(r.ToJson());
  return j;
}

ComparisonReport ComparisonReport::FromJson(const nlohmann::json& j) {
  ComparisonReport rep;
  try {
    std::vector<Metric> seen;
    for (const auto& sys : j.at("systems")) {
      ScoreReport row;
      row.system_name = sys.at("system").get<std::string>();
      row.segment_count = sys.value("segments", std::size_t{0});
      for (const auto& s : sys.at("scores")) {
        MetricScore ms;
        ms.metric = ParseMetricName(s.at("metric").get<std::string>());
        ms.value = s.at("score").get<double>();
        ms.signature = s.value("signature", MetricSignature::Default(ms.metric).ToString());
        ms.segment_count = row.segment_count;
        if (std::find(seen.begin(), seen.end(), ms.metric) == seen.end()) seen.push_back(ms.metric);
        row.scores.push_back(std::move(ms));
      }
      rep.rows.push_back(std::move(row));
    }
    std::sort(seen.begin(), seen.end());
    for (Metric m : seen) rep.signatures.push_back(MetricSignature::Default(m));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("comparison report: ") + e.what());
  }
  SortByBleu(rep.rows);
  return rep;
}

std::string ComparisonReport::ToText() const {
  std::vector<Metric> metrics;
  for (const auto& s : signatures) metrics.push_back(s.metric);
  std::size_t name_w = 6;
  for (const auto& r : rows) name_w = std::max(name_w, unicode::CodePointCount(r.system_name));
  std::ostringstream out;
  out << PadRight("System", name_w);
  for (Metric m : metrics) out << "  " << PadLeft(std::string(MetricName(m)) + std::string(MetricArrow(m)), 9);
  out << "\n";
  for (const auto& r : rows) {
    out << PadRight(r.system_name, name_w);
    for (Metric m : metrics) {
      const MetricScore* s = r.Find(m);
      out << "  " << PadLeft(s ? FormatScore(s->value) : "-", 9);
    }
    out << "\n";
  }
  out << "\n";
  for (Metric m : metrics) {
    // Stored rows may carry their own signature; prefer it over the default.
    std::string sig;
    for (const auto& r : rows) {
      if (const MetricScore* s = r.Find(m); s && sig.empty()) sig = s->signature;
    }
    if (sig.empty()) sig = FindSignature(signatures, m)->ToString();
    out << fmt::format("{}: {}\n", MetricName(m), sig);
  }
  return out.str();
}

}  // namespace locmt::metrics
