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


#ifndef LOCMT_QA_CONFIG_H_
#define LOCMT_QA_CONFIG_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/locfile/placeholder.h"
#include "locmt/qa/finding.h"

namespace locmt::qa {

struct TermEntry {
  std::string source_term;
  std::string target_term;
  bool case_sensitive = false;
  std::vector<std::string> forbidden_targets;
};

struct Termbase {
  std::vector<TermEntry> entries;

  // Throws Error(kInvalidConfig) on an empty or repeated source term
  // (compared case-folded for case-insensitive entries).
  void Validate() const;
  bool empty() const { return entries.empty(); }
};

// Columns source_term, target_term, case_sensitive (yes/no/true/false/1/0,
// blank = no), forbidden_targets separated by `;`. A first row whose first
// cell is `source_term` is a header.
Termbase ParseTermbaseCsv(std::string_view bytes);

struct GenderPair {
  std::string masculine;
  std::string feminine;
  std::vector<std::string> neutral_alternatives;
};

struct GenderLexicon {
  std::vector<GenderPair> pairs;
  // Source-side cues that the text addresses or names the player.
  std::vector<std::string> player_referent_markers;

  bool empty() const { return pairs.empty() || player_referent_markers.empty(); }
  static GenderLexicon Default();
  // {"pairs": [{"masculine", "feminine", "neutral"}], "markers": [...]}.
  // Words are stored case-folded.
  static GenderLexicon FromJson(const nlohmann::json& j);
};

enum class RegisterProfile { kTu, kVous, kUnconstrained };
RegisterProfile ParseRegisterProfile(std::string_view s);

struct RegisterLexicon {
  std::vector<std::string> tu_forms;
  std::vector<std::string> vous_forms;
  // Words ending in one of these count as `vous` forms unless listed in
  // ending_exceptions.
  std::vector<std::string> vous_endings;
  std::vector<std::string> ending_exceptions;

  static RegisterLexicon Default();
  static RegisterLexicon FromJson(const nlohmann::json& j);
};

struct VerbLexicon {
  std::vector<std::string> base_verbs;
  std::vector<std::string> subject_pronouns;
  // Words that may precede the verb (`please`, `now`).
  std::vector<std::string> lead_ins;

  static VerbLexicon Default();
  static VerbLexicon FromJson(const nlohmann::json& j);
};

struct QaConfig {
  std::set<Category> enabled;
  Termbase termbase;
  GenderLexicon gender;
  RegisterLexicon register_forms;
  RegisterProfile register_profile = RegisterProfile::kUnconstrained;
  std::string conversation_key = "conversation";
  VerbLexicon verbs;
  // Target phrases allowed to keep capitals, besides termbase targets.
  std::vector<std::string> capitalization_exemptions;
  locfile::PlaceholderGrammar placeholders;

  // Every automatic check enabled, shipped lexicons, empty termbase.
  static QaConfig Default();
  // Keys: checks, termbase (CSV path), gender, register, register_profile,
  // conversation_key, verbs, capitalization_exemptions, placeholder_literals.
  // Lexicon keys take an object or a JSON file path. Relative paths resolve
  // against base_dir. Unknown keys are Error(kInvalidConfig).
  static QaConfig FromJson(const nlohmann::json& j, const std::filesystem::path& base_dir);
};

QaConfig LoadQaConfig(const std::string& path);

}  // namespace locmt::qa

#endif  // LOCMT_QA_CONFIG_H_
