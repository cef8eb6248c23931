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

#ifndef EMOCOV_LEXICON_H_
#define EMOCOV_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocov/feature_model.h"

namespace emocov {

enum class PartOfSpeech : std::uint8_t {
  kVerb = 0,
  kAdjective,
  kAdverb,
  kNoun,
  kOther,
};

std::string_view ToString(PartOfSpeech pos);
std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view s);
std::optional<FeatureKind> ToFeatureKind(PartOfSpeech pos);
PartOfSpeech ToPartOfSpeech(FeatureKind kind);

struct LexiconEntry {
  std::string word;
  PartOfSpeech pos;
  Emotion emotion;
};

// Word -> (part of speech, emotion) table.
//
// File format, one record per line:
//
//   word<TAB>pos<TAB>emotion
//
// Lines starting with '#' and blank lines are ignored. Words are stored
// lowercased and must be single tokens; a word may appear at most once.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws Error(kLexiconParse) naming the offending line.
  static Lexicon Parse(std::string_view content);
  // Throws Error(kIo) if unreadable.
  static Lexicon Load(const std::filesystem::path& path);
  // The lexicon shipped with the library (data/lexicon.tsv).
  static const Lexicon& Starter();

  const LexiconEntry* Find(std::string_view word) const;

  std::span<const LexiconEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Words of the given part of speech and emotion, in file order.
  std::vector<std::string_view> WordsFor(FeatureKind kind,
                                         Emotion emotion) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Embedded copy of data/lexicon.tsv.
std::string_view StarterLexiconText();

}  // namespace emocov

#endif  // EMOCOV_LEXICON_H_
