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

#include "emocov/feature_model.h"

#include <unordered_set>

#include "emocov/error.h"

namespace emocov {

std::string_view ToString(Emotion e) {
  switch (e) {
    case Emotion::kJoy:
      return "joy";
    case Emotion::kAnger:
      return "anger";
    case Emotion::kSadness:
      return "sadness";
    case Emotion::kFear:
      return "fear";
    case Emotion::kSurprise:
      return "surprise";
    case Emotion::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::string_view ToString(FeatureKind k) {
  switch (k) {
    case FeatureKind::kVerb:
      return "verb";
    case FeatureKind::kAdjective:
      return "adjective";
    case FeatureKind::kAdverb:
      return "adverb";
    case FeatureKind::kNoun:
      return "noun";
  }
  return "verb";
}

std::string_view ShortName(FeatureKind k) {
  switch (k) {
    case FeatureKind::kVerb:
      return "verb";
    case FeatureKind::kAdjective:
      return "adj";
    case FeatureKind::kAdverb:
      return "adv";
    case FeatureKind::kNoun:
      return "noun";
  }
  return "verb";
}

std::string_view ToString(CorpusLabel l) {
  switch (l) {
    case CorpusLabel::kJoy:
      return "joy";
    case CorpusLabel::kAnger:
      return "anger";
    case CorpusLabel::kSadness:
      return "sadness";
    case CorpusLabel::kFear:
      return "fear";
    case CorpusLabel::kSurprise:
      return "surprise";
    case CorpusLabel::kLove:
      return "love";
  }
  return "joy";
}

std::string_view ToString(Origin o) {
  return o == Origin::kCorpus ? "corpus" : "generated";
}

std::optional<Emotion> ParseEmotion(std::string_view s) {
  for (Emotion e : kAllEmotions) {
    if (ToString(e) == s) return e;
  }
  return std::nullopt;
}

std::optional<FeatureKind> ParseFeatureKind(std::string_view s) {
  for (FeatureKind k : kAllFeatureKinds) {
    if (ToString(k) == s || ShortName(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<CorpusLabel> ParseCorpusLabel(std::string_view s) {
  for (CorpusLabel l : kAllCorpusLabels) {
    if (ToString(l) == s) return l;
  }
  return std::nullopt;
}

std::optional<Origin> ParseOrigin(std::string_view s) {
  if (s == "corpus") return Origin::kCorpus;
  if (s == "generated") return Origin::kGenerated;
  return std::nullopt;
}

std::optional<CorpusLabel> ToCorpusLabel(Emotion e) {
  if (e == Emotion::kNeutral) return std::nullopt;
  return static_cast<CorpusLabel>(Index(e));
}

PartitionKey GetPartitionKey(const FeatureVector& fv) { return fv.values(); }

std::map<PartitionKey, std::vector<std::size_t>> PartitionByKey(
    std::span<const FeatureVector> fvs) {
  std::map<PartitionKey, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < fvs.size(); ++i) {
    classes[GetPartitionKey(fvs[i])].push_back(i);
  }
  return classes;
}

std::string ToCanonicalString(const FeatureVector& fv) {
  std::string out;
  for (FeatureKind k : kAllFeatureKinds) {
    if (!out.empty()) out += ',';
    out += ShortName(k);
    out += '=';
    out += ToString(fv[k]);
  }
  return out;
}

std::optional<FeatureVector> ParseFeatureVector(std::string_view text) {
  FeatureVector fv;
  std::size_t pos = 0;
  for (FeatureKind k : kAllFeatureKinds) {
    std::size_t end = text.find(',', pos);
    std::string_view field = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos
                                           : end - pos);
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos || field.substr(0, eq) != ShortName(k)) {
      return std::nullopt;
    }
    auto e = ParseEmotion(field.substr(eq + 1));
    if (!e) return std::nullopt;
    fv = fv.With(k, *e);
    if (k == FeatureKind::kNoun) {
      if (end != std::string_view::npos) return std::nullopt;
    } else {
      if (end == std::string_view::npos) return std::nullopt;
      pos = end + 1;
    }
  }
  return fv;
}

FeatureVector FeatureVectorAt(std::size_t index) {
  FeatureVector fv;
  for (int i = kNumFeatureKinds - 1; i >= 0; --i) {
    fv = fv.With(static_cast<FeatureKind>(i),
                 static_cast<Emotion>(index % kNumEmotions));
    index /= kNumEmotions;
  }
  return fv;
}

std::size_t FeatureVectorIndex(const FeatureVector& fv) {
  std::size_t index = 0;
  for (FeatureKind k : kAllFeatureKinds) {
    index = index * kNumEmotions + Index(fv[k]);
  }
  return index;
}

bool IsBlank(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\v' &&
        c != '\f') {
      return false;
    }
  }
  return true;
}

void ValidateSuite(const TestSuite& suite) {
  std::unordered_set<std::string> ids;
  for (const Sentence& s : suite.sentences) {
    if (IsBlank(s.text)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sentence '" + s.id + "' has blank text");
    }
    if (!ids.insert(s.id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate sentence id '" + s.id + "' in suite '" +
                      suite.name + "'");
    }
  }
}

}  // namespace emocov
