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


#ifndef LOCMT_CORPUS_MANIFEST_H_
#define LOCMT_CORPUS_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/common/error.h"
#include "locmt/corpus/segment.h"

namespace locmt::corpus {

// A TMX or JSONL file stands alone. A key-value table pair needs both sides
// and their languages.
struct ManifestFile {
  std::string path;
  std::string target_path;  // set for table pairs
  std::string format;       // tmx, jsonl, tsv or csv
  std::string source_lang;
  std::string target_lang;
};

struct ManifestEntry {
  std::string game_title;
  std::string developer_year;
  std::vector<ManifestFile> files;
  std::optional<std::size_t> expected_segments;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  // Directory relative paths are resolved against.
  std::filesystem::path base_dir;

  // Throws Error(kInvalidManifest) on schema violations or repeated titles.
  // When check_files is set every listed file must exist.
  static CorpusManifest FromJson(const nlohmann::json& j, const std::filesystem::path& base_dir,
                                 bool check_files = true);
  nlohmann::json ToJson() const;
};

CorpusManifest LoadManifest(const std::string& path);

struct LoadResult {
  std::vector<BiSegment> segments;
  std::vector<Diagnostic> diagnostics;
};

// Parses the files of one entry. Keys become meta `key`, the file name meta
// `file`. Table orphans are reported, not kept.
LoadResult LoadEntry(const CorpusManifest& manifest, std::size_t index);

struct MergeResult {
  std::vector<BiSegment> segments;
  // kSegmentCountMismatch warnings for entries off their expected count.
  std::vector<Diagnostic> diagnostics;
};

// Concatenates in manifest order and sets meta `game_title`. All segments must
// share one language pair (Error(kLanguagePairMismatch)).
MergeResult Merge(const CorpusManifest& manifest, std::vector<std::vector<BiSegment>> parsed);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_MANIFEST_H_
