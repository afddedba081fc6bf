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


#ifndef LOCMT_QA_CHECKS_H_
#define LOCMT_QA_CHECKS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locmt/corpus/segment.h"
#include "locmt/locfile/placeholder.h"
#include "locmt/qa/config.h"
#include "locmt/qa/finding.h"

namespace locmt::qa {

using corpus::BiSegment;

// One error when the placeholder literal multisets differ.
std::vector<QaFinding> CheckPlaceholders(const BiSegment& seg, const locfile::PlaceholderGrammar& grammar = {});

// At most one finding per termbase entry whose source term occurs in the
// source: forbidden target (error), else source term copied into the target
// without the mandated term (error), else mandated term missing (warning).
std::vector<QaFinding> CheckTerms(const BiSegment& seg, const Termbase& termbase);

// French targets only; other targets give a single info finding. Flags runs
// of two or more capitalised, non-sentence-initial target words when the
// source has a title-case span. Termbase targets, exemptions and
// placeholders are skipped.
std::vector<QaFinding> CheckCapitalization(const BiSegment& seg, const Termbase& termbase = {},
                                           const std::vector<std::string>& exemptions = {},
                                           const locfile::PlaceholderGrammar& grammar = {});

// Throws Error(kInvalidConfig) for an empty lexicon.
std::vector<QaFinding> CheckGender(const BiSegment& seg, const GenderLexicon& lexicon);

// One group per conversation. Every segment must carry `conversation_key`
// (Error(kMissingConversationKey)). At most one finding per group.
std::vector<QaFinding> CheckRegister(std::span<const BiSegment> group, RegisterProfile profile,
                                     const RegisterLexicon& lexicon, std::string_view conversation_key = "conversation");

// English sources only.
std::vector<QaFinding> FlagAmbiguousVerbForms(const BiSegment& seg, const VerbLexicon& lexicon);

// One info finding per whitespace-joined run of all-caps source words.
std::vector<QaFinding> FlagAllCaps(const BiSegment& seg, const locfile::PlaceholderGrammar& grammar = {});

}  // namespace locmt::qa

#endif  // LOCMT_QA_CHECKS_H_
