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


#ifndef LOCMT_COMMON_ERROR_H_
#define LOCMT_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace locmt {

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  kEncodingError,
  // locfile
  kMalformedXml,
  kUnsupportedVersion,
  kMissingVariant,
  kInvalidUnit,
  kRaggedRow,
  kDuplicateKey,
  kEmbeddedNewline,
  kMalformedTable,
  // corpus
  kUnknownMetaKey,
  kLanguagePairMismatch,
  kInsufficientEligible,
  kUnknownField,
  kInvalidManifest,
  kSegmentCountMismatch,
  // metrics
  kLengthMismatch,
  kEmptyCorpus,
  kEmptyRef,
  kUnsupportedSignature,
  // qa
  kMissingConversationKey,
  kInvalidConfig,
  kUnknownElement,
};

std::string_view ErrorCodeName(ErrorCode code);

// Thrown for fatal conditions. Recoverable conditions (skipped rows, skipped
// translation units, count mismatches) are reported as Diagnostic values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Diagnostic {
  ErrorCode code;
  std::string message;
  // 1-based line number, 0 when not applicable.
  std::size_t line = 0;

  std::string ToString() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace locmt

#endif  // LOCMT_COMMON_ERROR_H_
