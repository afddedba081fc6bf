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


#include "locmt/qa/finding.h"

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"
#include "locmt/corpus/segment.h"

namespace locmt::qa {
namespace {

constexpr const char* kNames[kCategoryCount] = {
    "PlaceholderMismatch", "TermViolation",    "UntranslatedTerm", "CapitalizationDrift", "GenderMarked",
    "RegisterInconsistent", "AmbiguousVerbForm", "AllCapsRisk",      "OppositeMeaning",     "MeaningShift",
    "WrongTranslation",    "Omission",          "Hallucination"};

[[noreturn]] void Bad(const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); }

}  // namespace

bool IsManual(Category c) { return c >= Category::kOppositeMeaning; }

std::string CategoryName(Category c) {
  const std::string base = kNames[static_cast<int>(c)];
  return IsManual(c) ? "Manual(" + base + ")" : base;
}

Category ParseCategory(std::string_view name) {
  std::string_view inner = name;
  const bool wrapped = name.size() > 8 && name.substr(0, 7) == "Manual(" && name.back() == ')';
  if (wrapped) inner = name.substr(7, name.size() - 8);
  for (int i = 0; i < kCategoryCount; ++i) {
    if (inner == kNames[i]) {
      const auto c = static_cast<Category>(i);
      if (wrapped && !IsManual(c)) break;
      return c;
    }
  }
  Bad("unknown finding category '" + std::string(name) + "'");
}

std::string_view SeverityName(Severity s) {
  switch (s) {
    case Severity::kError: return "error";
    case Severity::kWarning: return "warning";
    case Severity::kInfo: return "info";
  }
  return "?";
}

Severity ParseSeverity(std::string_view name) {
  if (name == "error") return Severity::kError;
  if (name == "warning") return Severity::kWarning;
  if (name == "info") return Severity::kInfo;
  Bad("unknown severity '" + std::string(name) + "'");
}

Evidence MakeEvidence(Side side, std::string_view text, std::size_t start, std::size_t end) {
  return {side, start, end, std::string(text.substr(start, end - start))};
}

nlohmann::json QaFinding::ToJson() const {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : evidence) {
    ev.push_back({{"side", e.side == Side::kSource ? "source" : "target"},
                  {"start", e.start},
                  {"end", e.end},
                  {"excerpt", e.excerpt}});
  }
  return {{"segment_id", corpus::FormatId(segment_id)},
          {"position", position},
          {"category", CategoryName(category)},
          {"severity", SeverityName(severity)},
          {"message", message},
          {"evidence", ev},
          {"suggestions", suggestions}};
}

QaFinding QaFinding::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) Bad("finding must be an object");
  QaFinding f;
  try {
    f.segment_id = corpus::ParseId(j.at("segment_id").get<std::string>());
    f.category = ParseCategory(j.at("category").get<std::string>());
    f.severity = ParseSeverity(j.value("severity", std::string("error")));
    f.position = j.value("position", std::size_t{0});
    f.message = j.value("message", std::string());
    f.suggestions = j.value("suggestions", std::vector<std::string>{});
    for (const auto& e : j.value("evidence", nlohmann::json::array())) {
      Evidence ev;
      const std::string side = e.at("side").get<std::string>();
      if (side != "source" && side != "target") Bad("evidence side must be source or target");
      ev.side = side == "source" ? Side::kSource : Side::kTarget;
      ev.start = e.at("start").get<std::size_t>();
      ev.end = e.at("end").get<std::size_t>();
      ev.excerpt = e.value("excerpt", std::string());
      if (ev.end < ev.start) Bad("evidence span ends before it starts");
      f.evidence.push_back(std::move(ev));
    }
  } catch (const nlohmann::json::exception& e) {
    Bad(std::string("finding: ") + e.what());
  }
  return f;
}

std::string FindingsToJsonl(const std::vector<QaFinding>& findings) {
  std::string out;
  for (const auto& f : findings) {
    out += f.ToJson().dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<QaFinding> ReadAnnotationsJsonl(std::string_view text) {
  std::vector<QaFinding> out;
  std::size_t pos = 0;
  std::size_t line = 0;
  text = unicode::StripBom(text);
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view l = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (unicode::Strip(l).empty()) continue;
    const std::string where = "annotation line " + std::to_string(line) + ": ";
    QaFinding f;
    try {
      f = QaFinding::FromJson(nlohmann::json::parse(l));
    } catch (const nlohmann::json::exception& e) {
      Bad(where + e.what());
    } catch (const Error& e) {
      Bad(where + e.what());
    }
    if (!IsManual(f.category)) {
      Bad(where + CategoryName(f.category) + " is produced by the checks; annotations take manual categories only");
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace locmt::qa
