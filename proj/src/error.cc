// Copyright 2026 The emocov Authors.
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

#include "emocov/error.h"

namespace emocov {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return "usage";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kUnknownLabel:
      return "unknown_label";
    case ErrorCode::kLexiconParse:
      return "lexicon_parse";
    case ErrorCode::kTemplateInvalid:
      return "template_invalid";
    case ErrorCode::kMissingLabel:
      return "missing_label";
    case ErrorCode::kRemoteUnavailable:
      return "remote_unavailable";
    case ErrorCode::kLlmUnavailable:
      return "llm_unavailable";
    case ErrorCode::kEnsembleUnavailable:
      return "ensemble_unavailable";
    case ErrorCode::kSutUnavailable:
      return "sut_unavailable";
  }
  return "unknown";
}

bool IsEndpointError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRemoteUnavailable:
    case ErrorCode::kLlmUnavailable:
    case ErrorCode::kEnsembleUnavailable:
    case ErrorCode::kSutUnavailable:
      return true;
    default:
      return false;
  }
}

int ExitCodeFor(ErrorCode code) {
  if (code == ErrorCode::kUsage || code == ErrorCode::kInvalidArgument) {
    return 2;
  }
  if (IsEndpointError(code)) return 3;
  return 4;
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message
                              : message),
      code_(code),
      line_(line) {}

}  // namespace emocov
