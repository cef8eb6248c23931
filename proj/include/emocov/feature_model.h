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

#ifndef EMOCOV_FEATURE_MODEL_H_
#define EMOCOV_FEATURE_MODEL_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emocov {

// Emotion carried by one part-of-speech slot of a sentence. Declaration
// order is the canonical order used for tie-breaking and serialization.
// kNeutral also stands for "no word of that part of speech".
enum class Emotion : std::uint8_t {
  kJoy = 0,
  kAnger,
  kSadness,
  kFear,
  kSurprise,
  kNeutral,
};
inline constexpr int kNumEmotions = 6;
inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::kJoy,  Emotion::kAnger,    Emotion::kSadness,
    Emotion::kFear, Emotion::kSurprise, Emotion::kNeutral};

enum class FeatureKind : std::uint8_t {
  kVerb = 0,
  kAdjective,
  kAdverb,
  kNoun,
};
inline constexpr int kNumFeatureKinds = 4;
inline constexpr std::array<FeatureKind, kNumFeatureKinds> kAllFeatureKinds = {
    FeatureKind::kVerb, FeatureKind::kAdjective, FeatureKind::kAdverb,
    FeatureKind::kNoun};

// Gold label axis of a labelled corpus. Distinct from Emotion: corpora carry
// "love" and never "neutral". Canonical order joy < anger < sadness < fear <
// surprise < love.
enum class CorpusLabel : std::uint8_t {
  kJoy = 0,
  kAnger,
  kSadness,
  kFear,
  kSurprise,
  kLove,
};
inline constexpr int kNumCorpusLabels = 6;
inline constexpr std::array<CorpusLabel, kNumCorpusLabels> kAllCorpusLabels = {
    CorpusLabel::kJoy,  CorpusLabel::kAnger,    CorpusLabel::kSadness,
    CorpusLabel::kFear, CorpusLabel::kSurprise, CorpusLabel::kLove};

std::string_view ToString(Emotion e);
std::string_view ToString(FeatureKind k);
std::string_view ToString(CorpusLabel l);
// "verb", "adj", "adv", "noun" as used in the canonical vector text.
std::string_view ShortName(FeatureKind k);

std::optional<Emotion> ParseEmotion(std::string_view s);
// Accepts both the long ("adjective") and the short ("adj") form.
std::optional<FeatureKind> ParseFeatureKind(std::string_view s);
std::optional<CorpusLabel> ParseCorpusLabel(std::string_view s);

// Maps the five shared emotions onto the corpus axis; neutral has no
// counterpart.
std::optional<CorpusLabel> ToCorpusLabel(Emotion e);

constexpr std::size_t Index(Emotion e) { return static_cast<std::size_t>(e); }
constexpr std::size_t Index(FeatureKind k) {
  return static_cast<std::size_t>(k);
}
constexpr std::size_t Index(CorpusLabel l) {
  return static_cast<std::size_t>(l);
}

using PartitionKey = std::array<Emotion, kNumFeatureKinds>;

class FeatureVector {
 public:
  // All-neutral.
  constexpr FeatureVector()
      : values_{Emotion::kNeutral, Emotion::kNeutral, Emotion::kNeutral,
                Emotion::kNeutral} {}
  constexpr FeatureVector(Emotion verb, Emotion adjective, Emotion adverb,
                          Emotion noun)
      : values_{verb, adjective, adverb, noun} {}

  constexpr Emotion operator[](FeatureKind k) const {
    return values_[Index(k)];
  }
  constexpr Emotion verb() const { return values_[0]; }
  constexpr Emotion adjective() const { return values_[1]; }
  constexpr Emotion adverb() const { return values_[2]; }
  constexpr Emotion noun() const { return values_[3]; }

  constexpr FeatureVector With(FeatureKind k, Emotion e) const {
    FeatureVector out = *this;
    out.values_[Index(k)] = e;
    return out;
  }

  const PartitionKey& values() const { return values_; }

  friend constexpr auto operator<=>(const FeatureVector&,
                                    const FeatureVector&) = default;

 private:
  PartitionKey values_;
};

// Equivalence-class key: the 4 emotions in canonical kind order.
PartitionKey GetPartitionKey(const FeatureVector& fv);

// Groups positions of `fvs` by partition key. Classes are disjoint and their
// sizes sum to fvs.size().
std::map<PartitionKey, std::vector<std::size_t>> PartitionByKey(
    std::span<const FeatureVector> fvs);

// "verb=<label>,adj=<label>,adv=<label>,noun=<label>"
std::string ToCanonicalString(const FeatureVector& fv);
std::optional<FeatureVector> ParseFeatureVector(std::string_view text);

// Number of distinct feature vectors, 6^4.
inline constexpr std::size_t kFeatureSpaceSize = 1296;

// Inverse of a mixed-radix index over the feature space; index 0 is
// all-joy, kFeatureSpaceSize - 1 is all-neutral.
FeatureVector FeatureVectorAt(std::size_t index);
std::size_t FeatureVectorIndex(const FeatureVector& fv);

enum class Origin : std::uint8_t { kCorpus, kGenerated };
std::string_view ToString(Origin o);
std::optional<Origin> ParseOrigin(std::string_view s);

struct Sentence {
  std::string id;
  std::string text;
  std::optional<CorpusLabel> gold_label;
  Origin origin = Origin::kCorpus;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct TestSuite {
  std::string name;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }

  friend bool operator==(const TestSuite&, const TestSuite&) = default;
};

// Throws Error(kInvalidArgument) on a blank text or duplicate id.
void ValidateSuite(const TestSuite& suite);

bool IsBlank(std::string_view text);

}  // namespace emocov

#endif  // EMOCOV_FEATURE_MODEL_H_
