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

#ifndef EMOCOV_ERROR_H_
#define EMOCOV_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace emocov {

enum class ErrorCode {
  kUsage,
  kInvalidArgument,
  kIo,
  kParse,
  kUnknownLabel,
  kLexiconParse,
  kTemplateInvalid,
  kMissingLabel,
  kRemoteUnavailable,
  kLlmUnavailable,
  kEnsembleUnavailable,
  kSutUnavailable,
};

// Stable snake_case name used in machine-readable error records.
std::string_view ErrorCodeName(ErrorCode code);

// Process exit status for a failure of this kind: 2 usage, 3 endpoint
// failure, 4 data error.
int ExitCodeFor(ErrorCode code);

bool IsEndpointError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  // 1-based source line for parse-style errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace emocov

#endif  // EMOCOV_ERROR_H_
