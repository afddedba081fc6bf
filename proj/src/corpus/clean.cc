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


#include "locmt/corpus/clean.h"

#include <unordered_set>

#include "locmt/common/parallel.h"
#include "locmt/common/unicode.h"

namespace locmt::corpus {
namespace {

enum Verdict : char { kKeep, kEmpty, kUntranslated };

std::string PairKey(const std::string& a, const std::string& b) {
  std::string k = std::to_string(a.size());
  k += ':';
  k += a;
  k += b;
  return k;
}

std::string JoinLines(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      out.push_back(' ');
      if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
    } else if (s[i] == '\n') {
      out.push_back(' ');
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace

nlohmann::json CleanReport::ToJson() const {
  return {{"input_count", input_count},
          {"removed_duplicates", removed_duplicates},
          {"removed_empty", removed_empty},
          {"removed_untranslated", removed_untranslated},
          {"removed_by_filter", removed_by_filter},
          {"output_count", output_count}};
}

CleanResult Clean(std::vector<BiSegment> segments, const CleanOptions& options) {
  CleanResult result;
  CleanReport& r = result.report;
  r.input_count = segments.size();

  std::vector<Verdict> verdict(segments.size(), kKeep);
  std::vector<std::string> keys(segments.size());
  ParallelFor(segments.size(), options.threads, [&](std::size_t i) {
    const BiSegment& s = segments[i];
    if (unicode::Strip(s.source_text).empty() || unicode::Strip(s.target_text).empty()) {
      verdict[i] = kEmpty;
      return;
    }
    std::string src = NeutralKey(s.source_text);
    std::string tgt = NeutralKey(s.target_text);
    if (src == tgt) {
      verdict[i] = kUntranslated;
      return;
    }
    keys[i] = PairKey(src, tgt);
  });

  std::vector<BiSegment> kept;
  kept.reserve(segments.size());
  std::unordered_set<std::string> seen;
  seen.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (verdict[i] == kEmpty) {
      ++r.removed_empty;
    } else if (verdict[i] == kUntranslated) {
      ++r.removed_untranslated;
    } else if (!seen.insert(std::move(keys[i])).second) {
      ++r.removed_duplicates;
    } else {
      kept.push_back(std::move(segments[i]));
    }
  }

  FilterResult filtered = FilterMeta(std::move(kept), options.filter, options.threads);
  r.removed_by_filter = filtered.removed;
  result.segments = std::move(filtered.segments);
  result.diagnostics = std::move(filtered.diagnostics);
  r.output_count = result.segments.size();
  return result;
}

void NormalizeSegment(BiSegment& seg, const TypographyRules& rules) {
  seg.source_text = NormalizeTypography(JoinLines(seg.source_text), seg.source_lang, rules);
  seg.target_text = NormalizeTypography(JoinLines(seg.target_text), seg.target_lang, rules);
  seg.Rehash();
}

void NormalizeSegments(std::vector<BiSegment>& segments, const TypographyRules& rules, unsigned threads) {
  ParallelFor(segments.size(), threads, [&](std::size_t i) { NormalizeSegment(segments[i], rules); });
}

}  // namespace locmt::corpus
