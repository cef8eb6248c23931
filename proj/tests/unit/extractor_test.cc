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

#include "emocov/extractor.h"

#include <atomic>
#include <random>

#include "emocov/error.h"
#include "emocov/mock_service.h"
#include "gtest/gtest.h"

namespace emocov {
namespace {

// Tags from the starter lexicon and counts calls.
class CountingTagger : public WordEmotionService {
 public:
  std::vector<WordTag> TagTokens(
      std::span<const std::string> tokens) const override {
    ++calls;
    std::vector<WordTag> out;
    for (const std::string& t : tokens) {
      const LexiconEntry* e = Lexicon::Starter().Find(t);
      out.push_back(e ? WordTag{e->pos, e->emotion} : WordTag{});
    }
    return out;
  }
  mutable std::atomic<int> calls{0};
};

class BrokenTagger : public WordEmotionService {
 public:
  explicit BrokenTagger(bool short_reply) : short_reply_(short_reply) {}
  std::vector<WordTag> TagTokens(
      std::span<const std::string> tokens) const override {
    if (short_reply_) return std::vector<WordTag>(tokens.size() + 1);
    throw Error(ErrorCode::kIo, "connection refused");
  }

 private:
  bool short_reply_;
};

TokenTag Find(const std::vector<TokenTag>& tags, const std::string& token) {
  for (const TokenTag& t : tags) {
    if (t.token == token) return t;
  }
  ADD_FAILURE() << "no token " << token;
  return {};
}

TEST(ExtractorTest, TagsReferenceWords) {
  Extractor ex{ExtractorConfig{}};
  TokenTag laughed = Find(ex.TagSentence("She laughed when I saw her"), "laughed");
  EXPECT_EQ(laughed.pos, PartOfSpeech::kVerb);
  EXPECT_EQ(laughed.emotion, Emotion::kJoy);

  TokenTag nervously =
      Find(ex.TagSentence("He bites his nails nervously"), "nervously");
  EXPECT_EQ(nervously.pos, PartOfSpeech::kAdverb);
  EXPECT_EQ(nervously.emotion, Emotion::kFear);
}

TEST(ExtractorTest, RejectsBlankText) {
  Extractor ex{ExtractorConfig{}};
  for (const char* text : {"", "   "}) {
    try {
      ex.TagSentence(text);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(ExtractorTest, ExtractsFeatureVectors) {
  Extractor ex{ExtractorConfig{}};
  FeatureVector old_man = ex.Extract(
      "The old man sat alone, his eyes filled with tears, mourning the loss "
      "of his dearest friend");
  EXPECT_EQ(old_man.noun(), Emotion::kSadness);
  EXPECT_EQ(old_man.verb(), Emotion::kSadness);
  EXPECT_EQ(old_man.adverb(), Emotion::kNeutral);

  FeatureVector gift = ex.Extract("She received a joyful gift");
  EXPECT_EQ(gift.adjective(), Emotion::kJoy);
  EXPECT_EQ(gift.adverb(), Emotion::kNeutral);
}

TEST(ExtractorTest, CaseInsensitiveEvenWithoutLowercasing) {
  ExtractorConfig config;
  config.lowercase = false;
  Extractor ex{config};
  std::vector<TokenTag> tags = ex.TagSentence("LAUGHED");
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_EQ(tags[0].token, "LAUGHED");
  EXPECT_EQ(tags[0].emotion, Emotion::kJoy);
}

TEST(AggregateTagsTest, PluralityWithCanonicalTieBreak) {
  auto tag = [](PartOfSpeech pos, Emotion e) { return TokenTag{"w", pos, e}; };
  using P = PartOfSpeech;
  using E = Emotion;
  std::vector<TokenTag> tags = {
      tag(P::kNoun, E::kFear),    tag(P::kNoun, E::kSadness),
      tag(P::kNoun, E::kSadness), tag(P::kVerb, E::kSurprise),
      tag(P::kVerb, E::kAnger),   tag(P::kAdverb, E::kNeutral),
      tag(P::kOther, E::kJoy)};
  FeatureVector fv = AggregateTags(tags);
  EXPECT_EQ(fv.noun(), E::kSadness);
  EXPECT_EQ(fv.verb(), E::kAnger);  // 1-1 tie, anger precedes surprise
  EXPECT_EQ(fv.adverb(), E::kNeutral);
  EXPECT_EQ(fv.adjective(), E::kNeutral);
  EXPECT_EQ(AggregateTags({}), FeatureVector());
}

// Aggregation does not depend on token order.
TEST(AggregateTagsTest, PermutationInvarianceProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<TokenTag> tags(rng() % 12);
    for (auto& t : tags) {
      t = {"w", static_cast<PartOfSpeech>(rng() % 5),
           kAllEmotions[rng() % kNumEmotions]};
    }
    FeatureVector expected = AggregateTags(tags);
    std::shuffle(tags.begin(), tags.end(), rng);
    EXPECT_EQ(AggregateTags(tags), expected);
  }
}

TEST(ExtractorTest, RemoteBackendMatchesLexiconAndCaches) {
  auto tagger = std::make_shared<CountingTagger>();
  Extractor remote(ExtractorConfig{}, tagger);
  Extractor local{ExtractorConfig{}};
  TestSuite suite{"s",
                  {{"1", "she laughed nervously", {}, Origin::kCorpus},
                   {"2", "the grief of loss", {}, Origin::kCorpus},
                   {"3", "she laughed nervously", {}, Origin::kCorpus}}};
  EXPECT_EQ(remote.ExtractSuite(suite), local.ExtractSuite(suite));
  int after_first = tagger->calls.load();
  EXPECT_LE(after_first, 3);
  EXPECT_EQ(remote.ExtractSuite(suite), local.ExtractSuite(suite));
  EXPECT_EQ(tagger->calls.load(), after_first);
}

TEST(ExtractorTest, RemoteFailuresAreRemoteUnavailable) {
  for (bool short_reply : {false, true}) {
    Extractor ex(ExtractorConfig{},
                 std::make_shared<BrokenTagger>(short_reply));
    try {
      ex.Extract("she laughed");
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRemoteUnavailable);
    }
  }
}

TEST(ExtractorTest, MakeExtractorChoosesBackend) {
  auto mock = std::make_shared<const MockModelService>(MockOptions{});
  FixedEndpointResolver<MockModelService> resolver(mock);
  ExtractorConfig config;
  EXPECT_NE(MakeExtractor(config, resolver)->lexicon(), nullptr);

  config.backend = ExtractorBackend::kRemote;
  EXPECT_THROW(MakeExtractor(config, resolver), Error);
  config.endpoint = "http://127.0.0.1:1";
  auto remote = MakeExtractor(config, resolver);
  EXPECT_EQ(remote->lexicon(), nullptr);
  EXPECT_EQ(remote->Extract("She received a joyful gift").adjective(),
            Emotion::kJoy);
}

TEST(ExtractorTest, LoadsCustomLexicon) {
  ExtractorConfig config;
  config.lexicon_path = EMOCOV_TEST_DATA "/tiny_lexicon.tsv";
  Extractor ex{config};
  EXPECT_EQ(ex.Extract("the zebra grinned").verb(), Emotion::kJoy);
  EXPECT_EQ(ex.Extract("she laughed").verb(), Emotion::kNeutral);
}

}  // namespace
}  // namespace emocov
