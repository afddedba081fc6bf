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


#include "locmt/qa/config.h"

#include <set>

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"
#include "locmt/corpus/segment_io.h"
#include "locmt/locfile/kv_table.h"
#include "locmt/qa/text.h"

namespace locmt::qa {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void Bad(const std::string& msg) { throw Error(ErrorCode::kInvalidConfig, msg); }

std::vector<std::string> FoldedList(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) Bad(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) Bad(what + " must be an array of strings");
    out.push_back(Fold(v.get<std::string>()));
  }
  return out;
}

void CheckKeys(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) Bad(what + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) Bad(what + ": unknown key '" + k + "'");
  }
}

bool ParseFlag(std::string_view s, std::size_t line) {
  const std::string f = Fold(unicode::Strip(s));
  if (f.empty() || f == "no" || f == "false" || f == "0") return false;
  if (f == "yes" || f == "true" || f == "1") return true;
  Bad("termbase line " + std::to_string(line) + ": case_sensitive must be yes or no");
}

// An inline object, or a path to a JSON file holding one.
nlohmann::json Inline(const nlohmann::json& v, const fs::path& base) {
  if (!v.is_string()) return v;
  const fs::path p = fs::path(v.get<std::string>()).is_absolute() ? fs::path(v.get<std::string>())
                                                                   : base / v.get<std::string>();
  try {
    return nlohmann::json::parse(corpus::ReadFile(p.string()));
  } catch (const nlohmann::json::exception& e) {
    Bad(p.string() + ": " + e.what());
  }
}

}  // namespace

void Termbase::Validate() const {
  // A case-insensitive entry covers every casing of its term.
  std::set<std::string> exact;
  std::set<std::string> folded_sensitive;
  std::set<std::string> folded_insensitive;
  for (const auto& e : entries) {
    if (e.source_term.empty() || e.target_term.empty()) Bad("termbase entries need a source and a target term");
    const std::string f = Fold(e.source_term);
    const bool clash = e.case_sensitive ? exact.count(e.source_term) || folded_insensitive.count(f)
                                        : folded_insensitive.count(f) || folded_sensitive.count(f);
    if (clash) Bad("termbase repeats source term '" + e.source_term + "'");
    if (e.case_sensitive) {
      exact.insert(e.source_term);
      folded_sensitive.insert(f);
    } else {
      folded_insensitive.insert(f);
    }
  }
}

Termbase ParseTermbaseCsv(std::string_view bytes) {
  if (!unicode::IsValidUtf8(bytes)) throw Error(ErrorCode::kEncodingError, "termbase is not valid UTF-8");
  Termbase tb;
  const auto rows = locfile::ParseTableRows(bytes, locfile::TableFormat::kCsv);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i == 0 && !r.cells.empty() && Fold(unicode::Strip(r.cells[0])) == "source_term") continue;
    if (r.cells.size() < 2 || r.cells.size() > 4) {
      Bad("termbase line " + std::to_string(r.line) + ": expected 2 to 4 columns");
    }
    TermEntry e;
    e.source_term = std::string(unicode::Strip(r.cells[0]));
    e.target_term = std::string(unicode::Strip(r.cells[1]));
    if (r.cells.size() > 2) e.case_sensitive = ParseFlag(r.cells[2], r.line);
    if (r.cells.size() > 3) {
      std::string_view rest = r.cells[3];
      while (!rest.empty()) {
        const std::size_t semi = rest.find(';');
        const std::string_view item = unicode::Strip(rest.substr(0, semi));
        if (!item.empty()) e.forbidden_targets.emplace_back(item);
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
      }
    }
    tb.entries.push_back(std::move(e));
  }
  tb.Validate();
  return tb;
}

GenderLexicon GenderLexicon::Default() {
  GenderLexicon g;
  g.pairs = {{"homme", "femme", {"personne"}},
             {"garçon", "fille", {"enfant", "jeune"}},
             {"monsieur", "madame", {}},
             {"seigneur", "dame", {}},
             {"frère", "sœur", {}},
             {"mon gars", "ma fille", {}},
             {"prêt", "prête", {"paré à partir"}},
             {"seul", "seule", {"sans compagnie"}},
             {"fou", "folle", {"insensé"}}};
  g.player_referent_markers = {"you",    "your",   "yours",  "yourself", "yourselves",    ", woman",
                               ", man",  ", lad",  ", lass", ", boy",    ", girl",        "<alias=player>",
                               "%{player}"};
  return g;
}

GenderLexicon GenderLexicon::FromJson(const nlohmann::json& j) {
  CheckKeys(j, {"pairs", "markers"}, "gender lexicon");
  GenderLexicon g;
  const auto pairs = j.value("pairs", nlohmann::json::array());
  if (!pairs.is_array()) Bad("gender lexicon pairs must be an array");
  for (const auto& p : pairs) {
    CheckKeys(p, {"masculine", "feminine", "neutral"}, "gender pair");
    if (!p.contains("masculine") || !p.contains("feminine") || !p["masculine"].is_string() ||
        !p["feminine"].is_string()) {
      Bad("gender pair needs masculine and feminine strings");
    }
    g.pairs.push_back({Fold(p["masculine"].get<std::string>()), Fold(p["feminine"].get<std::string>()),
                       p.contains("neutral") ? FoldedList(p["neutral"], "neutral") : std::vector<std::string>{}});
  }
  g.player_referent_markers = FoldedList(j.value("markers", nlohmann::json::array()), "markers");
  return g;
}

RegisterProfile ParseRegisterProfile(std::string_view s) {
  if (s == "tu") return RegisterProfile::kTu;
  if (s == "vous") return RegisterProfile::kVous;
  if (s == "unconstrained") return RegisterProfile::kUnconstrained;
  Bad("register profile must be tu, vous or unconstrained");
}

RegisterLexicon RegisterLexicon::Default() {
  RegisterLexicon r;
  r.tu_forms = {"tu", "te", "t'", "toi", "ton", "ta", "tes"};
  r.vous_forms = {"vous", "votre", "vos", "vôtre", "vôtres"};
  r.vous_endings = {"ez"};
  r.ending_exceptions = {"chez", "assez", "nez", "rez", "lez"};
  return r;
}

RegisterLexicon RegisterLexicon::FromJson(const nlohmann::json& j) {
  CheckKeys(j, {"tu", "vous", "vous_endings", "ending_exceptions"}, "register lexicon");
  RegisterLexicon r = Default();
  if (j.contains("tu")) r.tu_forms = FoldedList(j["tu"], "tu");
  if (j.contains("vous")) r.vous_forms = FoldedList(j["vous"], "vous");
  if (j.contains("vous_endings")) r.vous_endings = FoldedList(j["vous_endings"], "vous_endings");
  if (j.contains("ending_exceptions")) r.ending_exceptions = FoldedList(j["ending_exceptions"], "ending_exceptions");
  return r;
}

VerbLexicon VerbLexicon::Default() {
  VerbLexicon v;
  v.base_verbs = {"ask",    "bring",   "buy",     "choose", "collect", "continue", "defeat", "defend", "enter",
                  "equip",  "escort",  "find",    "follow", "get",     "give",     "go",     "help",   "hold",
                  "kill",   "learn",   "leave",   "load",   "meet",    "open",     "close",  "press",  "read",
                  "retrieve", "return", "save",   "search", "select",  "sell",     "speak",  "take",   "talk",
                  "tell",   "travel",  "use",     "wait",   "investigate", "craft", "deliver", "destroy"};
  v.subject_pronouns = {"i", "you", "he", "she", "it", "we", "they"};
  v.lead_ins = {"please", "now", "then", "just", "quickly", "first", "also", "and", "so", "simply"};
  return v;
}

VerbLexicon VerbLexicon::FromJson(const nlohmann::json& j) {
  CheckKeys(j, {"base_verbs", "subject_pronouns", "lead_ins"}, "verb lexicon");
  VerbLexicon v = Default();
  if (j.contains("base_verbs")) v.base_verbs = FoldedList(j["base_verbs"], "base_verbs");
  if (j.contains("subject_pronouns")) v.subject_pronouns = FoldedList(j["subject_pronouns"], "subject_pronouns");
  if (j.contains("lead_ins")) v.lead_ins = FoldedList(j["lead_ins"], "lead_ins");
  return v;
}

QaConfig QaConfig::Default() {
  QaConfig c;
  for (int i = 0; i < kCategoryCount; ++i) {
    const auto cat = static_cast<Category>(i);
    if (!IsManual(cat)) c.enabled.insert(cat);
  }
  c.gender = GenderLexicon::Default();
  c.register_forms = RegisterLexicon::Default();
  c.verbs = VerbLexicon::Default();
  return c;
}

QaConfig QaConfig::FromJson(const nlohmann::json& j, const fs::path& base_dir) {
  CheckKeys(j,
            {"checks", "termbase", "gender", "register", "register_profile", "conversation_key", "verbs",
             "capitalization_exemptions", "placeholder_literals", "max_tag_bytes"},
            "qa config");
  QaConfig c = Default();
  try {
    if (j.contains("checks")) {
      c.enabled.clear();
      if (!j["checks"].is_array()) Bad("checks must be an array of category names");
      for (const auto& name : j["checks"]) {
        if (!name.is_string()) Bad("checks must be an array of category names");
        Category cat;
        try {
          cat = ParseCategory(name.get<std::string>());
        } catch (const Error& e) {
          Bad(e.what());
        }
        if (IsManual(cat)) Bad(CategoryName(cat) + " cannot be checked automatically");
        c.enabled.insert(cat);
      }
    }
    if (j.contains("termbase")) {
      const auto& t = j["termbase"];
      if (t.is_string()) {
        const fs::path p = fs::path(t.get<std::string>()).is_absolute() ? fs::path(t.get<std::string>())
                                                                         : base_dir / t.get<std::string>();
        c.termbase = ParseTermbaseCsv(corpus::ReadFile(p.string()));
      } else if (t.is_array()) {
        for (const auto& e : t) {
          CheckKeys(e, {"source_term", "target_term", "case_sensitive", "forbidden_targets"}, "termbase entry");
          c.termbase.entries.push_back({e.at("source_term").get<std::string>(), e.at("target_term").get<std::string>(),
                                        e.value("case_sensitive", false),
                                        e.value("forbidden_targets", std::vector<std::string>{})});
        }
        c.termbase.Validate();
      } else {
        Bad("termbase must be a CSV path or an array of entries");
      }
    }
    if (j.contains("gender")) c.gender = GenderLexicon::FromJson(Inline(j["gender"], base_dir));
    if (j.contains("register")) c.register_forms = RegisterLexicon::FromJson(Inline(j["register"], base_dir));
    if (j.contains("verbs")) c.verbs = VerbLexicon::FromJson(Inline(j["verbs"], base_dir));
    if (j.contains("register_profile")) c.register_profile = ParseRegisterProfile(j["register_profile"].get<std::string>());
    if (j.contains("conversation_key")) c.conversation_key = j["conversation_key"].get<std::string>();
    if (j.contains("capitalization_exemptions")) {
      c.capitalization_exemptions = j["capitalization_exemptions"].get<std::vector<std::string>>();
    }
    if (j.contains("placeholder_literals")) {
      for (const auto& lit : j["placeholder_literals"].get<std::vector<std::string>>()) {
        c.placeholders.extra_literals.push_back({lit, locfile::PlaceholderKind::kVariable});
      }
    }
    if (j.contains("max_tag_bytes")) c.placeholders.max_tag_bytes = j["max_tag_bytes"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    Bad(std::string("qa config: ") + e.what());
  }
  return c;
}

QaConfig LoadQaConfig(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(corpus::ReadFile(path));
  } catch (const nlohmann::json::exception& e) {
    Bad(path + ": " + e.what());
  }
  return QaConfig::FromJson(j, fs::path(path).parent_path());
}

}  // namespace locmt::qa
