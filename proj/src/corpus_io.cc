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

#include "emocov/corpus_io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace emocov {
namespace {

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<Sentence> ParseSemicolon(std::string_view line,
                                       std::size_t line_no,
                                       std::string_view source_name,
                                       LoadIssue& issue) {
  std::size_t split = line.rfind(';');
  if (split == std::string_view::npos) {
    issue = {line_no, ErrorCode::kParse, "missing ';' separator"};
    return std::nullopt;
  }
  std::string_view text = line.substr(0, split);
  std::string_view token = TrimView(line.substr(split + 1));
  if (IsBlank(text)) {
    issue = {line_no, ErrorCode::kParse, "empty text"};
    return std::nullopt;
  }
  auto label = ParseCorpusLabel(token);
  if (!label) {
    issue = {line_no, ErrorCode::kUnknownLabel,
             "unknown label '" + std::string(token) + "'"};
    return std::nullopt;
  }
  return Sentence{std::string(source_name) + ":" + std::to_string(line_no),
                  std::string(text), label, Origin::kCorpus};
}

std::optional<Sentence> ParseNative(std::string_view line, std::size_t line_no,
                                    LoadIssue& issue) {
  auto json = nlohmann::json::parse(line, nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    issue = {line_no, ErrorCode::kParse, "not a JSON object"};
    return std::nullopt;
  }
  auto string_field = [&](const char* key) -> std::optional<std::string> {
    if (!json.contains(key) || !json[key].is_string()) return std::nullopt;
    return json[key].get<std::string>();
  };
  auto id = string_field("id");
  auto text = string_field("text");
  if (!id || !text) {
    issue = {line_no, ErrorCode::kParse, "record needs string id and text"};
    return std::nullopt;
  }
  if (IsBlank(*text)) {
    issue = {line_no, ErrorCode::kParse, "empty text"};
    return std::nullopt;
  }
  Sentence s{*id, *text, std::nullopt, Origin::kCorpus};
  if (json.contains("gold_label") && !json["gold_label"].is_null()) {
    auto token = string_field("gold_label");
    auto label = token ? ParseCorpusLabel(*token) : std::nullopt;
    if (!label) {
      issue = {line_no, ErrorCode::kUnknownLabel,
               "unknown label " + json["gold_label"].dump()};
      return std::nullopt;
    }
    s.gold_label = label;
  }
  if (json.contains("origin")) {
    auto token = string_field("origin");
    auto origin = token ? ParseOrigin(*token) : std::nullopt;
    if (!origin) {
      issue = {line_no, ErrorCode::kParse,
               "unknown origin " + json["origin"].dump()};
      return std::nullopt;
    }
    s.origin = *origin;
  }
  return s;
}

}  // namespace

std::string_view ToString(CorpusFormat format) {
  return format == CorpusFormat::kJsonlNative ? "jsonl_native"
                                              : "semicolon_text_label";
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view s) {
  if (s == "jsonl_native") return CorpusFormat::kJsonlNative;
  if (s == "semicolon_text_label") return CorpusFormat::kSemicolonTextLabel;
  return std::nullopt;
}

CorpusFormat FormatForPath(const std::filesystem::path& path) {
  return path.extension() == ".jsonl" ? CorpusFormat::kJsonlNative
                                      : CorpusFormat::kSemicolonTextLabel;
}

LoadResult ParseCorpus(std::string_view content, std::string_view source_name,
                       CorpusFormat format) {
  LoadResult result;
  result.suite.name = std::string(source_name);
  std::unordered_set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (IsBlank(line) || line.front() == '#') continue;
    ++result.record_lines;

    LoadIssue issue;
    std::optional<Sentence> s =
        format == CorpusFormat::kJsonlNative
            ? ParseNative(line, line_no, issue)
            : ParseSemicolon(line, line_no, source_name, issue);
    if (s && !ids.insert(s->id).second) {
      issue = {line_no, ErrorCode::kParse, "duplicate id '" + s->id + "'"};
      s.reset();
    }
    if (s) {
      result.suite.sentences.push_back(std::move(*s));
    } else {
      result.issues.push_back(std::move(issue));
    }
  }
  return result;
}

LoadResult LoadCorpusLenient(const std::filesystem::path& path,
                             CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading " + path.string());
  LoadResult result =
      ParseCorpus(buf.str(), path.filename().string(), format);
  result.suite.name = path.stem().string();
  return result;
}

TestSuite LoadCorpus(const std::filesystem::path& path, CorpusFormat format) {
  LoadResult result = LoadCorpusLenient(path, format);
  if (!result.issues.empty()) {
    const LoadIssue& first = result.issues.front();
    throw Error(first.code, path.filename().string() + ": " + first.reason,
                first.line);
  }
  return std::move(result.suite);
}

std::string SerializeSuite(const TestSuite& suite) {
  std::string out;
  for (const Sentence& s : suite.sentences) {
    nlohmann::json record = {
        {"id", s.id},
        {"text", s.text},
        {"gold_label", s.gold_label ? nlohmann::json(ToString(*s.gold_label))
                                    : nlohmann::json(nullptr)},
        {"origin", ToString(s.origin)}};
    out += record.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

void SaveSuite(const TestSuite& suite, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << SerializeSuite(suite);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

}  // namespace emocov
