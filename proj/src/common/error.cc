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


#include "locmt/common/error.h"

namespace locmt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kMissingVariant: return "MissingVariant";
    case ErrorCode::kInvalidUnit: return "InvalidUnit";
    case ErrorCode::kRaggedRow: return "RaggedRow";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kEmbeddedNewline: return "EmbeddedNewline";
    case ErrorCode::kMalformedTable: return "MalformedTable";
    case ErrorCode::kUnknownMetaKey: return "UnknownMetaKey";
    case ErrorCode::kLanguagePairMismatch: return "LanguagePairMismatch";
    case ErrorCode::kInsufficientEligible: return "InsufficientEligible";
    case ErrorCode::kUnknownField: return "UnknownField";
    case ErrorCode::kInvalidManifest: return "InvalidManifest";
    case ErrorCode::kSegmentCountMismatch: return "SegmentCountMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyRef: return "EmptyRef";
    case ErrorCode::kUnsupportedSignature: return "UnsupportedSignature";
    case ErrorCode::kMissingConversationKey: return "MissingConversationKey";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kUnknownElement: return "UnknownElement";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

std::string Diagnostic::ToString() const {
  std::string out(ErrorCodeName(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace locmt
