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


#include "locmt/corpus/segment_io.h"

#include <fstream>
#include <sstream>

#include "locmt/common/error.h"
#include "locmt/common/unicode.h"

namespace locmt::corpus {
namespace {

std::string RequireString(const nlohmann::json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_string()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace

nlohmann::json SegmentToJson(const BiSegment& seg) {
  nlohmann::json j;
  j["id"] = FormatId(seg.id);
  j["source"] = seg.source_text;
  j["target"] = seg.target_text;
  j["source_lang"] = seg.source_lang;
  j["target_lang"] = seg.target_lang;
  j["meta"] = seg.meta;
  return j;
}

BiSegment SegmentFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "segment must be a JSON object");
  Meta meta;
  if (const auto it = j.find("meta"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw Error(ErrorCode::kInvalidArgument, "meta must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) throw Error(ErrorCode::kInvalidArgument, "meta value for '" + k + "' must be a string");
      meta[k] = v.get<std::string>();
    }
  }
  BiSegment s = MakeSegment(RequireString(j, "source"), RequireString(j, "target"), RequireString(j, "source_lang"),
                            RequireString(j, "target_lang"), std::move(meta));
  if (const auto it = j.find("id"); it != j.end()) {
    if (!it->is_string() || ParseId(it->get<std::string>()) != s.id) {
      throw Error(ErrorCode::kInvalidArgument, "stored id does not match content (expected " + FormatId(s.id) + ")");
    }
  }
  return s;
}

std::vector<BiSegment> ReadSegmentsJsonl(std::string_view text) {
  text = unicode::StripBom(text);
  std::vector<BiSegment> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (unicode::Strip(line).empty()) continue;
    try {
      out.push_back(SegmentFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string WriteSegmentsJsonl(const std::vector<BiSegment>& segments) {
  std::string out;
  for (const auto& s : segments) {
    out += SegmentToJson(s).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<BiSegment> LoadSegments(const std::string& path) { return ReadSegmentsJsonl(ReadFile(path)); }

void SaveSegments(const std::string& path, const std::vector<BiSegment>& segments) {
  WriteFile(path, WriteSegmentsJsonl(segments));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path + "'");
}

}  // namespace locmt::corpus
