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

#include "emocov/augmentor.h"

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "emocov/error.h"
#include "emocov/mock_service.h"
#include "gtest/gtest.h"

namespace emocov {
namespace {

ProjectionCell Cell(std::vector<std::pair<FeatureKind, Emotion>> parts) {
  ProjectionCell cell;
  for (auto [k, e] : parts) {
    cell.projection.features.push_back(static_cast<int>(Index(k)));
    cell.values.push_back(static_cast<int>(Index(e)));
  }
  return cell;
}

// Always answers with the same text and records prompts.
class CannedLlm : public GeneratorService {
 public:
  explicit CannedLlm(std::string text) : text_(std::move(text)) {}
  std::string Generate(std::string_view prompt) const override {
    std::lock_guard lock(mu_);
    prompts_.emplace_back(prompt);
    return text_;
  }
  std::vector<std::string> prompts() const {
    std::lock_guard lock(mu_);
    return prompts_;
  }

 private:
  std::string text_;
  mutable std::mutex mu_;
  mutable std::vector<std::string> prompts_;
};

class FailingLlm : public GeneratorService {
 public:
  std::string Generate(std::string_view) const override {
    throw Error(ErrorCode::kRemoteUnavailable, "HTTP 503");
  }
};

TEST(PromptTest, TwoConstraintPrompt) {
  GapSpec gap{Cell({{FeatureKind::kVerb, Emotion::kSadness},
                    {FeatureKind::kAdverb, Emotion::kJoy}})};
  EXPECT_EQ(BuildPrompt(gap, AugmentorConfig{}),
            "Generate a sentence with a verb labeled as sadness and an adverb "
            "labeled as joy");
}

TEST(PromptTest, SingleConstraintPrompt) {
  GapSpec gap{Cell({{FeatureKind::kNoun, Emotion::kFear}})};
  EXPECT_EQ(BuildPrompt(gap, AugmentorConfig{}),
            "Generate a sentence with a noun labeled as fear");
}

TEST(PromptTest, NeutralConstraintPrompt) {
  GapSpec gap{Cell({{FeatureKind::kVerb, Emotion::kNeutral},
                    {FeatureKind::kAdjective, Emotion::kAnger}})};
  EXPECT_EQ(BuildPrompt(gap, AugmentorConfig{}),
            "Generate a sentence with an adjective labeled as anger and "
            "without any emotionally charged verb");
  GapSpec all_neutral{Cell({{FeatureKind::kVerb, Emotion::kNeutral},
                            {FeatureKind::kNoun, Emotion::kNeutral}})};
  EXPECT_EQ(BuildPrompt(all_neutral, AugmentorConfig{}),
            "Generate a sentence without any emotionally charged verb and "
            "without any emotionally charged noun");
}

TEST(PromptTest, CustomTemplateAndAttemptSuffix) {
  AugmentorConfig config;
  config.prompt_template = "Write one tweet {constraints}. Keep it short.";
  GapSpec gap{Cell({{FeatureKind::kAdverb, Emotion::kSurprise}})};
  std::string prompt = BuildPrompt(gap, config);
  EXPECT_EQ(prompt,
            "Write one tweet with an adverb labeled as surprise. Keep it short.");
  EXPECT_EQ(AttemptPrompt(prompt, 1), prompt);
  EXPECT_EQ(AttemptPrompt(prompt, 3), prompt + " (Attempt 3)");
}

TEST(PromptTest, InvalidTemplates) {
  for (const char* t : {"no placeholder", "{constraints} {constraints}",
                        "{constraints} for {user}"}) {
    try {
      ValidatePromptTemplate(t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kTemplateInvalid);
    }
  }
}

TEST(PlanGapsTest, EmptyPlans) {
  CoverageState full(CoverageConfig{1, 4, 6});
  for (std::size_t i = 0; i < kFeatureSpaceSize; ++i) full.Add(FeatureVectorAt(i));
  EXPECT_TRUE(PlanGaps(full, 100).empty());
  EXPECT_TRUE(PlanGaps(CoverageState(CoverageConfig{}), 0).empty());
}

TEST(PlanGapsTest, FullPlanMatchesUncovered) {
  CoverageState state(CoverageConfig{2, 4, 6});
  std::vector<GapSpec> plan = PlanGaps(state, 216);
  ASSERT_EQ(plan.size(), 216u);
  std::set<ProjectionCell> planned;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    EXPECT_EQ(plan[i].priority, static_cast<int>(i));
    planned.insert(plan[i].cell);
  }
  std::vector<ProjectionCell> uncovered = state.Uncovered();
  EXPECT_EQ(planned, std::set<ProjectionCell>(uncovered.begin(), uncovered.end()));
}

// A budgeted plan is a prefix of the full plan and names only uncovered cells.
TEST(PlanGapsTest, BudgetIsPrefixProperty) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    CoverageState state(CoverageConfig{1 + static_cast<int>(rng() % 3), 4, 6});
    for (int i = 0, n = static_cast<int>(rng() % 30); i < n; ++i) {
      state.Add(FeatureVectorAt(rng() % kFeatureSpaceSize));
    }
    std::vector<GapSpec> full = PlanGaps(state, state.total_cells());
    EXPECT_EQ(full.size(), state.total_cells() - state.covered_count());
    std::size_t budget = rng() % (full.size() + 3);
    std::vector<GapSpec> part = PlanGaps(state, budget);
    ASSERT_EQ(part.size(), std::min(budget, full.size()));
    for (std::size_t i = 0; i < part.size(); ++i) {
      EXPECT_EQ(part[i].cell, full[i].cell);
      EXPECT_FALSE(state.IsCovered(part[i].cell));
    }
  }
}

// Brute force: a cell's score is the largest number of uncovered cells any
// single vector through it would cover. Plans are sorted by score, then by
// cell index.
TEST(PlanGapsTest, RankingMatchesBruteForceOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    CoverageConfig config{2 + static_cast<int>(rng() % 2), 4, 6};
    CoverageState state(config);
    for (int i = 0, n = static_cast<int>(rng() % 200); i < n; ++i) {
      state.Add(FeatureVectorAt(rng() % kFeatureSpaceSize));
    }
    std::map<ProjectionCell, std::size_t> score;
    for (std::size_t v = 0; v < kFeatureSpaceSize; ++v) {
      FeatureVector fv = FeatureVectorAt(v);
      std::vector<ProjectionCell> cells = CellsOf(fv, config);
      std::size_t gain = 0;
      for (const auto& c : cells) gain += state.IsCovered(c) ? 0 : 1;
      for (const auto& c : cells) {
        if (!state.IsCovered(c)) score[c] = std::max(score[c], gain);
      }
    }
    std::vector<GapSpec> plan = PlanGaps(state, state.total_cells());
    ASSERT_EQ(plan.size(), score.size());
    for (std::size_t i = 1; i < plan.size(); ++i) {
      std::size_t a = score.at(plan[i - 1].cell);
      std::size_t b = score.at(plan[i].cell);
      ASSERT_GE(a, b);
      if (a == b) {
        ASSERT_LT(state.CellIndex(plan[i - 1].cell),
                  state.CellIndex(plan[i].cell));
      }
    }
  }
}

class FillGapsTest : public ::testing::Test {
 protected:
  FillGapsTest()
      : mock_(std::make_shared<MockModelService>(MockOptions{42, {}, false})) {}

  TestSuite Seed() const {
    return {"seed",
            {{"seed:1", "she laughed", CorpusLabel::kJoy, Origin::kCorpus},
             {"seed:2", "the grief of loss", CorpusLabel::kSadness,
              Origin::kCorpus}}};
  }

  Extractor extractor_{ExtractorConfig{}};
  std::shared_ptr<MockModelService> mock_;
};

TEST_F(FillGapsTest, AcceptedSentencesHitTheirCells) {
  TestSuite seed = Seed();
  CoverageState state(CoverageConfig{2, 4, 6});
  state.AddSuite(extractor_.ExtractSuite(seed));
  std::uint64_t before = state.covered_count();

  AugmentorConfig config;
  config.max_new_sentences = 30;
  AugmentResult result = FillGaps(seed, state, config, extractor_, *mock_);

  EXPECT_EQ(result.generated_count, 30u);
  EXPECT_GT(state.covered_count(), before);
  ASSERT_EQ(result.suite.size(), seed.size() + 30);
  for (std::size_t i = 0; i < seed.size(); ++i) {
    EXPECT_EQ(result.suite.sentences[i], seed.sentences[i]);
  }
  for (std::size_t i = seed.size(); i < result.suite.size(); ++i) {
    const Sentence& s = result.suite.sentences[i];
    EXPECT_EQ(s.origin, Origin::kGenerated);
    EXPECT_FALSE(s.gold_label.has_value());
    EXPECT_EQ(s.id, "seed:gen:" + std::to_string(i - seed.size()));
  }
  std::size_t accepted = 0;
  for (const GenerationAttempt& a : result.attempts) {
    if (!a.accepted) continue;
    ++accepted;
    EXPECT_TRUE(CellMatches(a.gap.cell, extractor_.Extract(a.candidate_text)));
  }
  EXPECT_EQ(accepted, result.generated_count);
  EXPECT_NO_THROW(ValidateSuite(result.suite));
}

// Each accepted sentence at k=2 adds between 1 and 6 cells.
TEST_F(FillGapsTest, EachAcceptanceAddsBoundedCells) {
  CoverageState state(CoverageConfig{2, 4, 6});
  AugmentorConfig config;
  config.max_new_sentences = 1;
  for (int round = 0; round < 20; ++round) {
    std::uint64_t before = state.covered_count();
    AugmentResult r = FillGaps(Seed(), state, config, extractor_, *mock_);
    ASSERT_EQ(r.generated_count, 1u);
    EXPECT_GE(state.covered_count() - before, 1u);
    EXPECT_LE(state.covered_count() - before, 6u);
  }
}

TEST_F(FillGapsTest, OffTargetLlmIsRejected) {
  const std::string text = "She laughed joyfully at the cheerful party";
  CoverageState state(CoverageConfig{2, 4, 6});
  state.Add(extractor_.Extract(text));
  CannedLlm llm(text);
  AugmentorConfig config;
  config.max_new_sentences = 5;
  config.max_attempts_per_gap = 2;
  TestSuite seed = Seed();
  std::uint64_t before = state.covered_count();
  AugmentResult result = FillGaps(seed, state, config, extractor_, llm);

  EXPECT_EQ(result.generated_count, 0u);
  EXPECT_EQ(result.suite, seed);
  EXPECT_EQ(state.covered_count(), before);
  ASSERT_EQ(result.attempts.size(), 2 * (216 - before));
  for (std::size_t i = 0; i < result.attempts.size(); ++i) {
    const GenerationAttempt& a = result.attempts[i];
    EXPECT_FALSE(a.accepted);
    EXPECT_EQ(a.attempt_index, static_cast<int>(i % 2) + 1);
    if (a.attempt_index == 2) {
      EXPECT_EQ(a.prompt, result.attempts[i - 1].prompt + " (Attempt 2)");
    }
  }
}

TEST_F(FillGapsTest, BlankCandidatesAreNeverAccepted) {
  CoverageState state(CoverageConfig{1, 4, 6});
  CannedLlm llm("   \n");
  AugmentorConfig config;
  config.max_attempts_per_gap = 1;
  AugmentResult r = FillGaps(Seed(), state, config, extractor_, llm);
  EXPECT_EQ(r.generated_count, 0u);
  EXPECT_EQ(r.attempts.size(), 24u);
  for (const auto& a : r.attempts) EXPECT_TRUE(a.candidate_text.empty());
}

TEST_F(FillGapsTest, ZeroBudgetDoesNothing) {
  CoverageState state(CoverageConfig{2, 4, 6});
  AugmentorConfig config;
  config.max_new_sentences = 0;
  AugmentResult r = FillGaps(Seed(), state, config, extractor_, *mock_);
  EXPECT_TRUE(r.attempts.empty());
  EXPECT_EQ(r.suite, Seed());
  EXPECT_EQ(state.covered_count(), 0u);
}

TEST_F(FillGapsTest, LlmFailureIsLlmUnavailable) {
  CoverageState state(CoverageConfig{2, 4, 6});
  FailingLlm llm;
  try {
    FillGaps(Seed(), state, AugmentorConfig{}, extractor_, llm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLlmUnavailable);
  }
}

TEST_F(FillGapsTest, RejectsBadConfig) {
  CoverageState state(CoverageConfig{2, 4, 6});
  AugmentorConfig config;
  config.max_attempts_per_gap = 0;
  EXPECT_THROW(FillGaps(Seed(), state, config, extractor_, *mock_), Error);
  config = AugmentorConfig{};
  config.prompt_template = "nothing";
  EXPECT_THROW(FillGaps(Seed(), state, config, extractor_, *mock_), Error);
}

// The attempt log does not depend on how many requests run in parallel.
TEST_F(FillGapsTest, ConcurrencyDoesNotChangeTheLog) {
  std::vector<std::string> reference;
  for (int inflight : {1, 2, 5, 16}) {
    CoverageState state(CoverageConfig{3, 4, 6});
    state.AddSuite(extractor_.ExtractSuite(Seed()));
    AugmentorConfig config;
    config.max_new_sentences = 40;
    config.max_inflight = inflight;
    AugmentResult r = FillGaps(Seed(), state, config, extractor_, *mock_);
    std::vector<std::string> log;
    for (const auto& a : r.attempts) log.push_back(ToJson(a).dump());
    for (const auto& s : r.suite.sentences) log.push_back(s.id + "|" + s.text);
    if (reference.empty()) {
      reference = log;
    } else {
      EXPECT_EQ(log, reference) << "max_inflight=" << inflight;
    }
  }
}

TEST(GenerationAttemptTest, Json) {
  GenerationAttempt a;
  a.gap.cell = Cell({{FeatureKind::kVerb, Emotion::kJoy},
                     {FeatureKind::kNoun, Emotion::kNeutral}});
  a.prompt = "p";
  a.candidate_text = "c";
  a.accepted = true;
  a.attempt_index = 2;
  nlohmann::json j = ToJson(a);
  EXPECT_EQ(j["gap"], "verb=joy,noun=neutral");
  EXPECT_EQ(j["extracted"], "verb=neutral,adj=neutral,adv=neutral,noun=neutral");
  EXPECT_EQ(j["attempt_index"], 2);
  EXPECT_EQ(j["accepted"], true);
}

}  // namespace
}  // namespace emocov
