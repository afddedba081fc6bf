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


#ifndef LOCMT_CORPUS_SEGMENT_IO_H_
#define LOCMT_CORPUS_SEGMENT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/corpus/segment.h"

namespace locmt::corpus {

// {"id","source","target","source_lang","target_lang","meta"}
nlohmann::json SegmentToJson(const BiSegment& seg);

// The id is recomputed; a stored id that disagrees is an
// Error(kInvalidArgument).
BiSegment SegmentFromJson(const nlohmann::json& j);

// One object per line. Blank lines are skipped. Errors name the line.
std::vector<BiSegment> ReadSegmentsJsonl(std::string_view text);
std::string WriteSegmentsJsonl(const std::vector<BiSegment>& segments);

std::vector<BiSegment> LoadSegments(const std::string& path);
void SaveSegments(const std::string& path, const std::vector<BiSegment>& segments);

// Whole-file helpers. Throw Error(kIoError).
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

}  // namespace locmt::corpus

#endif  // LOCMT_CORPUS_SEGMENT_IO_H_
