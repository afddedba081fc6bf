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


#ifndef LOCMT_QA_FINDING_H_
#define LOCMT_QA_FINDING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace locmt::qa {

// Declaration order is the tie-break order of findings on one segment.
enum class Category {
  kPlaceholderMismatch,
  kTermViolation,
  kUntranslatedTerm,
  kCapitalizationDrift,
  kGenderMarked,
  kRegisterInconsistent,
  kAmbiguousVerbForm,
  kAllCapsRisk,
  // Human annotation only.
  kOppositeMeaning,
  kMeaningShift,
  kWrongTranslation,
  kOmission,
  kHallucination,
};

inline constexpr int kCategoryCount = 13;

bool IsManual(Category c);
// `PlaceholderMismatch`, ..., `Manual(Omission)`.
std::string CategoryName(Category c);
// Accepts the names above; manual ones also without the `Manual(...)` wrapper.
// Throws Error(kInvalidArgument).
Category ParseCategory(std::string_view name);

enum class Severity { kError, kWarning, kInfo };
std::string_view SeverityName(Severity s);
Severity ParseSeverity(std::string_view name);

enum class Side { kSource, kTarget };

struct Evidence {
  Side side = Side::kTarget;
  std::size_t start = 0;  // byte offsets into that side's text
  std::size_t end = 0;
  std::string excerpt;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct QaFinding {
  std::uint64_t segment_id = 0;
  // Index of the segment in the checked list.
  std::size_t position = 0;
  Category category = Category::kPlaceholderMismatch;
  Severity severity = Severity::kError;
  std::string message;
  std::vector<Evidence> evidence;
  // Replacement candidates or alternative readings.
  std::vector<std::string> suggestions;

  nlohmann::json ToJson() const;
  static QaFinding FromJson(const nlohmann::json& j);
  friend bool operator==(const QaFinding&, const QaFinding&) = default;
};

Evidence MakeEvidence(Side side, std::string_view text, std::size_t start, std::size_t end);

std::string FindingsToJsonl(const std::vector<QaFinding>& findings);

// Annotation files: one finding per line, manual categories only. A finding
// names its segment by `segment_id`; `position` is filled in by the caller.
std::vector<QaFinding> ReadAnnotationsJsonl(std::string_view text);

}  // namespace locmt::qa

#endif  // LOCMT_QA_FINDING_H_
