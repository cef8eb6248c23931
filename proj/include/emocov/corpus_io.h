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

#ifndef EMOCOV_CORPUS_IO_H_
#define EMOCOV_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emocov/error.h"
#include "emocov/feature_model.h"

namespace emocov {

enum class CorpusFormat {
  // "text;label" per line; the last ';' separates the label.
  kSemicolonTextLabel,
  // One {id, text, gold_label, origin} object per line.
  kJsonlNative,
};

std::string_view ToString(CorpusFormat format);
std::optional<CorpusFormat> ParseCorpusFormat(std::string_view s);
// ".jsonl" selects the native format, anything else the semicolon one.
CorpusFormat FormatForPath(const std::filesystem::path& path);

struct LoadIssue {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::kParse;
  std::string reason;
};

struct LoadResult {
  TestSuite suite;
  std::vector<LoadIssue> issues;
  // Non-blank, non-comment lines seen; always suite.size() + issues.size().
  std::size_t record_lines = 0;
};

// Parses `content` as if read from a file called `source_name`. Semicolon
// records get ids "<source_name>:<line>". Every bad record is reported in
// `issues`, none are dropped silently. Blank lines and lines starting with
// '#' are skipped.
LoadResult ParseCorpus(std::string_view content, std::string_view source_name,
                       CorpusFormat format);

// Reads the file and parses it leniently. Throws Error(kIo).
LoadResult LoadCorpusLenient(const std::filesystem::path& path,
                             CorpusFormat format);

// Strict form: throws the first issue as Error(kParse / kUnknownLabel) with
// its line number.
TestSuite LoadCorpus(const std::filesystem::path& path, CorpusFormat format);

std::string SerializeSuite(const TestSuite& suite);

// Writes the native JSONL form. Throws Error(kIo).
void SaveSuite(const TestSuite& suite, const std::filesystem::path& path);

}  // namespace emocov

#endif  // EMOCOV_CORPUS_IO_H_
