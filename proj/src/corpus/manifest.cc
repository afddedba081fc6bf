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


#include "locmt/corpus/manifest.h"

#include <set>

#include "locmt/corpus/segment_io.h"
#include "locmt/locfile/align.h"
#include "locmt/locfile/kv_table.h"
#include "locmt/locfile/tmx.h"

namespace locmt::corpus {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void Invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidManifest, msg); }

std::string FormatFromPath(const std::string& path) {
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".tmx") return "tmx";
  if (ext == ".jsonl") return "jsonl";
  if (ext == ".tsv" || ext == ".txt") return "tsv";
  if (ext == ".csv") return "csv";
  return "";
}

std::string StringField(const nlohmann::json& j, const char* name, const std::string& where, bool required) {
  const auto it = j.find(name);
  if (it == j.end()) {
    if (required) Invalid(where + ": missing '" + name + "'");
    return "";
  }
  if (!it->is_string()) Invalid(where + ": '" + name + "' must be a string");
  return it->get<std::string>();
}

void CheckKeys(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) Invalid(where + ": unknown field '" + k + "'");
  }
}

ManifestFile ParseFile(const nlohmann::json& j, const std::string& where) {
  ManifestFile f;
  if (j.is_string()) {
    f.path = j.get<std::string>();
    f.format = FormatFromPath(f.path);
    if (f.format != "tmx" && f.format != "jsonl") {
      Invalid(where + ": '" + f.path + "' needs the {source, target, source_lang, target_lang} form");
    }
    return f;
  }
  if (!j.is_object()) Invalid(where + ": a file is a path or an object");
  CheckKeys(j, {"source", "target", "source_lang", "target_lang", "format"}, where);
  f.path = StringField(j, "source", where, true);
  f.target_path = StringField(j, "target", where, true);
  f.source_lang = StringField(j, "source_lang", where, true);
  f.target_lang = StringField(j, "target_lang", where, true);
  f.format = StringField(j, "format", where, false);
  if (f.format.empty()) f.format = FormatFromPath(f.path);
  if (f.format != "tsv" && f.format != "csv") Invalid(where + ": table format must be tsv or csv");
  return f;
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

}  // namespace

CorpusManifest CorpusManifest::FromJson(const nlohmann::json& j, const fs::path& base_dir, bool check_files) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    CheckKeys(j, {"entries"}, "manifest");
    const auto it = j.find("entries");
    if (it == j.end()) Invalid("manifest: missing 'entries'");
    list = &*it;
  }
  if (!list->is_array()) Invalid("manifest: entries must be an array");

  CorpusManifest m;
  m.base_dir = base_dir;
  std::set<std::string> titles;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const nlohmann::json& e = (*list)[i];
    const std::string where = "entry " + std::to_string(i + 1);
    if (!e.is_object()) Invalid(where + ": must be an object");
    CheckKeys(e, {"title", "developer_year", "files", "expected_segments"}, where);
    ManifestEntry entry;
    entry.game_title = StringField(e, "title", where, true);
    if (entry.game_title.empty()) Invalid(where + ": empty title");
    if (!titles.insert(entry.game_title).second) Invalid(where + ": repeated title '" + entry.game_title + "'");
    entry.developer_year = StringField(e, "developer_year", where, false);
    const auto files = e.find("files");
    if (files == e.end() || !files->is_array()) Invalid(where + ": 'files' must be an array");
    for (const auto& f : *files) entry.files.push_back(ParseFile(f, where));
    if (const auto it = e.find("expected_segments"); it != e.end() && !it->is_null()) {
      if (!it->is_number_unsigned()) Invalid(where + ": expected_segments must be a non-negative integer");
      entry.expected_segments = it->get<std::size_t>();
    }
    if (check_files) {
      for (const auto& f : entry.files) {
        for (const std::string& p : {f.path, f.target_path}) {
          if (!p.empty() && !fs::is_regular_file(Resolve(base_dir, p))) Invalid(where + ": file not found: " + p);
        }
      }
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

nlohmann::json CorpusManifest::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& f : e.files) {
      if (f.target_path.empty()) {
        files.push_back(f.path);
      } else {
        files.push_back({{"source", f.path},
                         {"target", f.target_path},
                         {"source_lang", f.source_lang},
                         {"target_lang", f.target_lang},
                         {"format", f.format}});
      }
    }
    nlohmann::json j = {{"title", e.game_title}, {"developer_year", e.developer_year}, {"files", files}};
    if (e.expected_segments) j["expected_segments"] = *e.expected_segments;
    list.push_back(std::move(j));
  }
  return {{"entries", list}};
}

CorpusManifest LoadManifest(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::exception& e) {
    Invalid(path + ": " + e.what());
  }
  return CorpusManifest::FromJson(j, fs::path(path).parent_path());
}

LoadResult LoadEntry(const CorpusManifest& manifest, std::size_t index) {
  const ManifestEntry& entry = manifest.entries.at(index);
  LoadResult out;
  for (const ManifestFile& f : entry.files) {
    const std::string path = Resolve(manifest.base_dir, f.path).string();
    const std::string name = fs::path(f.path).filename().string();
    auto note = [&](const Diagnostic& d) {
      out.diagnostics.push_back({d.code, name + ": " + d.message, d.line});
    };
    std::vector<BiSegment> segs;
    if (f.format == "tmx") {
      const locfile::TmxDocument doc = locfile::ParseTmx(ReadFile(path));
      for (const auto& d : doc.diagnostics) note(d);
      for (const auto& u : doc.units) segs.push_back(SegmentFromUnit(u));
    } else if (f.format == "jsonl") {
      segs = LoadSegments(path);
    } else {
      const auto format = f.format == "csv" ? locfile::TableFormat::kCsv : locfile::TableFormat::kTsv;
      const auto src = locfile::ParseKvTable(ReadFile(path), format, f.source_lang);
      const auto tgt = locfile::ParseKvTable(ReadFile(Resolve(manifest.base_dir, f.target_path).string()), format,
                                             f.target_lang);
      for (const auto& d : src.diagnostics) note(d);
      for (const auto& d : tgt.diagnostics) note(d);
      const auto aligned = locfile::AlignByKey(src.entries, tgt.entries, entry.game_title);
      for (const auto& o : aligned.orphans) {
        note({ErrorCode::kMissingVariant, "key '" + o.key + "' (" + o.lang + ") has no counterpart", o.line});
      }
      for (const auto& u : aligned.units) segs.push_back(SegmentFromUnit(u));
    }
    for (auto& s : segs) {
      s.meta.emplace("file", name);
      out.segments.push_back(std::move(s));
    }
  }
  return out;
}

MergeResult Merge(const CorpusManifest& manifest, std::vector<std::vector<BiSegment>> parsed) {
  if (parsed.size() != manifest.entries.size()) {
    throw Error(ErrorCode::kInvalidArgument, "merge needs one segment list per manifest entry");
  }
  MergeResult out;
  const BiSegment* first = nullptr;
  std::string first_title;
  std::size_t total = 0;
  for (const auto& p : parsed) total += p.size();
  out.segments.reserve(total);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const ManifestEntry& e = manifest.entries[i];
    for (auto& s : parsed[i]) {
      if (first == nullptr) {
        first = &s;
        first_title = e.game_title;
      } else if (s.source_lang != first->source_lang || s.target_lang != first->target_lang) {
        throw Error(ErrorCode::kLanguagePairMismatch, "'" + e.game_title + "' has " + s.source_lang + "-" +
                                                          s.target_lang + " but '" + first_title + "' has " +
                                                          first->source_lang + "-" + first->target_lang);
      }
    }
    if (e.expected_segments && *e.expected_segments != parsed[i].size()) {
      out.diagnostics.push_back({ErrorCode::kSegmentCountMismatch,
                                 "'" + e.game_title + "': expected " + std::to_string(*e.expected_segments) +
                                     " segments, got " + std::to_string(parsed[i].size()),
                                 0});
    }
  }
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    for (auto& s : parsed[i]) {
      s.meta["game_title"] = manifest.entries[i].game_title;
      out.segments.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace locmt::corpus
