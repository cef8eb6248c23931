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

#include "emocov/lexicon.h"

#include <fstream>
#include <sstream>

#include "emocov/error.h"
#include "emocov/tokenizer.h"

namespace emocov {

std::string_view ToString(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kVerb:
      return "verb";
    case PartOfSpeech::kAdjective:
      return "adjective";
    case PartOfSpeech::kAdverb:
      return "adverb";
    case PartOfSpeech::kNoun:
      return "noun";
    case PartOfSpeech::kOther:
      return "other";
  }
  return "other";
}

std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view s) {
  for (auto pos : {PartOfSpeech::kVerb, PartOfSpeech::kAdjective,
                   PartOfSpeech::kAdverb, PartOfSpeech::kNoun,
                   PartOfSpeech::kOther}) {
    if (ToString(pos) == s) return pos;
  }
  return std::nullopt;
}

std::optional<FeatureKind> ToFeatureKind(PartOfSpeech pos) {
  if (pos == PartOfSpeech::kOther) return std::nullopt;
  return static_cast<FeatureKind>(pos);
}

PartOfSpeech ToPartOfSpeech(FeatureKind kind) {
  return static_cast<PartOfSpeech>(kind);
}

Lexicon Lexicon::Parse(std::string_view content) {
  Lexicon lex;
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

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw Error(ErrorCode::kLexiconParse,
                  "expected word<TAB>pos<TAB>emotion, got " +
                      std::to_string(fields.size()) + " field(s)",
                  line_no);
    }
    std::vector<std::string> tokens = Tokenize(fields[0], /*lowercase=*/true);
    if (tokens.size() != 1) {
      throw Error(ErrorCode::kLexiconParse,
                  "word '" + std::string(fields[0]) + "' is not a single token",
                  line_no);
    }
    auto part = ParsePartOfSpeech(fields[1]);
    if (!part) {
      throw Error(ErrorCode::kLexiconParse,
                  "unknown part of speech '" + std::string(fields[1]) + "'",
                  line_no);
    }
    auto emotion = ParseEmotion(fields[2]);
    if (!emotion) {
      throw Error(ErrorCode::kLexiconParse,
                  "unknown emotion '" + std::string(fields[2]) + "'", line_no);
    }
    if (lex.index_.contains(tokens[0])) {
      throw Error(ErrorCode::kLexiconParse,
                  "duplicate word '" + tokens[0] + "'", line_no);
    }
    lex.index_.emplace(tokens[0], lex.entries_.size());
    lex.entries_.push_back({tokens[0], *part, *emotion});
  }
  return lex;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read lexicon " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

const Lexicon& Lexicon::Starter() {
  static const Lexicon* const kStarter =
      new Lexicon(Parse(StarterLexiconText()));
  return *kStarter;
}

const LexiconEntry* Lexicon::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string_view> Lexicon::WordsFor(FeatureKind kind,
                                                Emotion emotion) const {
  std::vector<std::string_view> words;
  for (const LexiconEntry& e : entries_) {
    if (e.pos == ToPartOfSpeech(kind) && e.emotion == emotion) {
      words.push_back(e.word);
    }
  }
  return words;
}

}  // namespace emocov
