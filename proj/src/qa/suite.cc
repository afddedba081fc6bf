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


#include "locmt/qa/suite.h"

#include <algorithm>
#include <fmt/format.h>
#include <unordered_map>

#include "locmt/common/error.h"
#include "locmt/common/parallel.h"
#include "locmt/qa/checks.h"

namespace locmt::qa {
namespace {

void SortAndCount(QaReport& r) {
  std::stable_sort(r.findings.begin(), r.findings.end(), [](const QaFinding& a, const QaFinding& b) {
    return a.position != b.position ? a.position < b.position : a.category < b.category;
  });
  r.counts.fill(0);
  for (const auto& f : r.findings) ++r.counts[static_cast<std::size_t>(f.category)];
}

}  // namespace

nlohmann::json QaReport::SummaryJson() const {
  nlohmann::json by_category = nlohmann::json::object();
  for (int i = 0; i < kCategoryCount; ++i) by_category[CategoryName(static_cast<Category>(i))] = counts[i];
  std::size_t sev[3] = {0, 0, 0};
  for (const auto& f : findings) ++sev[static_cast<int>(f.severity)];
  return {{"total", findings.size()},
          {"categories", by_category},
          {"severities", {{"error", sev[0]}, {"warning", sev[1]}, {"info", sev[2]}}}};
}

std::string QaReport::SummaryText() const {
  std::string out = fmt::format("{:<30}{:>8}\n", "Category", "Count");
  for (int i = 0; i < kCategoryCount; ++i) {
    out += fmt::format("{:<30}{:>8}\n", CategoryName(static_cast<Category>(i)), counts[i]);
  }
  std::size_t sev[3] = {0, 0, 0};
  for (const auto& f : findings) ++sev[static_cast<int>(f.severity)];
  out += fmt::format("\n{:<30}{:>8}\n{:<30}{:>8}\n{:<30}{:>8}\n{:<30}{:>8}\n", "error", sev[0], "warning", sev[1],
                     "info", sev[2], "total", findings.size());
  return out;
}

QaReport RunSuite(const std::vector<corpus::BiSegment>& segments, const QaConfig& config, unsigned threads) {
  auto on = [&](Category c) { return config.enabled.count(c) > 0; };
  const bool terms = on(Category::kTermViolation) || on(Category::kUntranslatedTerm);
  if (on(Category::kGenderMarked) && config.gender.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "the gender check needs a non-empty lexicon");
  }

  std::vector<std::vector<QaFinding>> per(segments.size());
  ParallelFor(
      segments.size(), threads,
      [&](std::size_t i) {
        const corpus::BiSegment& s = segments[i];
        auto& out = per[i];
        auto add = [&](std::vector<QaFinding> fs) {
          for (auto& f : fs) {
            if (!on(f.category)) continue;
            f.position = i;
            out.push_back(std::move(f));
          }
        };
        if (on(Category::kPlaceholderMismatch)) add(CheckPlaceholders(s, config.placeholders));
        if (terms) add(CheckTerms(s, config.termbase));
        if (on(Category::kCapitalizationDrift)) {
          add(CheckCapitalization(s, config.termbase, config.capitalization_exemptions, config.placeholders));
        }
        if (on(Category::kGenderMarked)) add(CheckGender(s, config.gender));
        if (on(Category::kAmbiguousVerbForm)) add(FlagAmbiguousVerbForms(s, config.verbs));
        if (on(Category::kAllCapsRisk)) add(FlagAllCaps(s, config.placeholders));
      },
      64);

  QaReport report;
  for (auto& v : per) {
    for (auto& f : v) report.findings.push_back(std::move(f));
  }

  if (on(Category::kRegisterInconsistent)) {
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const auto it = segments[i].meta.find(config.conversation_key);
      if (it == segments[i].meta.end()) continue;
      auto [g, fresh] = groups.try_emplace(it->second);
      if (fresh) order.push_back(it->second);
      g->second.push_back(i);
    }
    for (const auto& name : order) {
      const auto& idx = groups[name];
      std::vector<corpus::BiSegment> group;
      group.reserve(idx.size());
      for (std::size_t i : idx) group.push_back(segments[i]);
      for (auto& f : CheckRegister(group, config.register_profile, config.register_forms, config.conversation_key)) {
        f.position = idx[f.position];
        report.findings.push_back(std::move(f));
      }
    }
  }
  SortAndCount(report);
  return report;
}

void AddAnnotations(QaReport& report, const std::vector<corpus::BiSegment>& segments,
                    std::vector<QaFinding> annotations) {
  std::unordered_map<std::uint64_t, std::size_t> position;
  for (std::size_t i = 0; i < segments.size(); ++i) position.emplace(segments[i].id, i);
  for (auto& a : annotations) {
    if (!IsManual(a.category)) {
      throw Error(ErrorCode::kInvalidArgument, CategoryName(a.category) + " is not a manual category");
    }
    const auto it = position.find(a.segment_id);
    if (it == position.end()) {
      throw Error(ErrorCode::kInvalidArgument, "annotation names unknown segment " + corpus::FormatId(a.segment_id));
    }
    a.position = it->second;
    report.findings.push_back(std::move(a));
  }
  SortAndCount(report);
}

}  // namespace locmt::qa
