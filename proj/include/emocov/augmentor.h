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

#ifndef EMOCOV_AUGMENTOR_H_
#define EMOCOV_AUGMENTOR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "emocov/coverage.h"
#include "emocov/endpoints.h"
#include "emocov/extractor.h"
#include "emocov/feature_model.h"
#include "json.hpp"

namespace emocov {

struct GapSpec {
  ProjectionCell cell;
  // 0 is the most valuable gap.
  int priority = 0;
};

inline constexpr std::string_view kConstraintsPlaceholder = "{constraints}";
inline constexpr std::string_view kDefaultPromptTemplate =
    "Generate a sentence {constraints}";

struct AugmentorConfig {
  std::string llm_endpoint;
  int max_attempts_per_gap = 3;
  // Accepted sentences per fill_gaps call.
  int max_new_sentences = 50;
  // Must contain "{constraints}" exactly once and no other placeholder. It
  // expands to one clause per constrained (kind, emotion) pair.
  std::string prompt_template = std::string(kDefaultPromptTemplate);
  int max_inflight = 4;
};

struct GenerationAttempt {
  GapSpec gap;
  std::string prompt;
  std::string candidate_text;
  FeatureVector extracted;
  bool accepted = false;
  // 1-based.
  int attempt_index = 1;
};

// {gap, prompt, candidate, extracted, accepted, attempt_index}
nlohmann::json ToJson(const GenerationAttempt& attempt);

// Throws Error(kTemplateInvalid).
void ValidatePromptTemplate(std::string_view prompt_template);

// Clause list for a cell of the emotional space, e.g.
// "with a verb labeled as sadness and an adverb labeled as joy". Non-neutral
// constraints come first, then "without any emotionally charged <pos>" for
// each neutral one, each group in canonical kind order.
std::string RenderConstraints(const ProjectionCell& cell);

// Throws Error(kTemplateInvalid) for a bad template and
// Error(kInvalidArgument) for a cell outside the emotional space.
std::string BuildPrompt(const GapSpec& gap, const AugmentorConfig& config);

// Prompt for a retry: attempt 1 is the base prompt, later attempts append
// " (Attempt i)".
std::string AttemptPrompt(std::string_view base_prompt, int attempt_index);

// Up to `budget` uncovered cells, best first. A cell's score is the largest
// number of uncovered cells that one full feature vector through that cell
// would cover; higher scores come first and ties go to the lower canonical
// cell index.
std::vector<GapSpec> PlanGaps(const CoverageState& state, std::size_t budget);

struct AugmentResult {
  TestSuite suite;
  std::vector<GenerationAttempt> attempts;
  std::size_t generated_count = 0;
};

// Generates sentences for the planned gaps of `state` until
// config.max_new_sentences are accepted or the plan runs out.
//
// A candidate is accepted when its re-extracted feature vector lies in the
// target cell; it is then appended to the suite (origin=generated, no gold
// label) and its full vector added to `state`. Gaps that become covered
// before their turn are skipped. LLM calls for up to max_inflight gaps may be
// in flight at once, but acceptance runs in plan order, so the result and
// the attempt log do not depend on max_inflight.
//
// Throws Error(kLlmUnavailable) when the generator fails.
AugmentResult FillGaps(const TestSuite& suite, CoverageState& state,
                       const AugmentorConfig& config,
                       const Extractor& extractor,
                       const GeneratorService& llm);

}  // namespace emocov

#endif  // EMOCOV_AUGMENTOR_H_
