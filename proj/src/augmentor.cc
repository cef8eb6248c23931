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

#include <algorithm>
#include <cctype>
#include <exception>
#include <unordered_set>

#include "emocov/error.h"
#include "emocov/parallel.h"

namespace emocov {
namespace {

constexpr std::size_t kMaxPlanningPoints = std::size_t{1} << 20;

std::string_view Article(FeatureKind k) {
  return (k == FeatureKind::kAdjective || k == FeatureKind::kAdverb) ? "an"
                                                                     : "a";
}

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Speculative {
  std::string text;
  std::exception_ptr error;
};

std::string GenerateOrThrow(const GeneratorService& llm,
                            const std::string& prompt) {
  try {
    return llm.Generate(prompt);
  } catch (const Error& e) {
    throw Error(ErrorCode::kLlmUnavailable, e.what());
  }
}

}  // namespace

nlohmann::json ToJson(const GenerationAttempt& attempt) {
  CoverageConfig space;
  space.k = static_cast<int>(attempt.gap.cell.values.size());
  return {{"gap", CellToString(attempt.gap.cell, space)},
          {"prompt", attempt.prompt},
          {"candidate", attempt.candidate_text},
          {"extracted", ToCanonicalString(attempt.extracted)},
          {"accepted", attempt.accepted},
          {"attempt_index", attempt.attempt_index}};
}

void ValidatePromptTemplate(std::string_view prompt_template) {
  std::size_t first = prompt_template.find(kConstraintsPlaceholder);
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kTemplateInvalid,
                "prompt template lacks {constraints}");
  }
  if (prompt_template.find(kConstraintsPlaceholder, first + 1) !=
      std::string_view::npos) {
    throw Error(ErrorCode::kTemplateInvalid,
                "prompt template repeats {constraints}");
  }
  std::string rest(prompt_template.substr(0, first));
  rest += prompt_template.substr(first + kConstraintsPlaceholder.size());
  if (rest.find('{') != std::string::npos ||
      rest.find('}') != std::string::npos) {
    throw Error(ErrorCode::kTemplateInvalid,
                "prompt template has an unknown placeholder");
  }
}

std::string RenderConstraints(const ProjectionCell& cell) {
  std::vector<std::string> clauses;
  std::vector<FeatureKind> neutral;
  for (std::size_t i = 0; i < cell.values.size(); ++i) {
    int f = cell.projection.features[i];
    int v = cell.values[i];
    if (f < 0 || f >= kNumFeatureKinds || v < 0 || v >= kNumEmotions) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cell is outside the emotional feature space");
    }
    auto kind = static_cast<FeatureKind>(f);
    auto emotion = static_cast<Emotion>(v);
    if (emotion == Emotion::kNeutral) {
      neutral.push_back(kind);
      continue;
    }
    std::string clause(clauses.empty() ? "with " : "");
    clause += Article(kind);
    clause += ' ';
    clause += ToString(kind);
    clause += " labeled as ";
    clause += ToString(emotion);
    clauses.push_back(std::move(clause));
  }
  for (FeatureKind kind : neutral) {
    clauses.push_back("without any emotionally charged " +
                      std::string(ToString(kind)));
  }
  std::string out;
  for (const std::string& c : clauses) {
    if (!out.empty()) out += " and ";
    out += c;
  }
  return out;
}

std::string BuildPrompt(const GapSpec& gap, const AugmentorConfig& config) {
  ValidatePromptTemplate(config.prompt_template);
  std::string prompt = config.prompt_template;
  prompt.replace(prompt.find(kConstraintsPlaceholder),
                 kConstraintsPlaceholder.size(), RenderConstraints(gap.cell));
  return prompt;
}

std::string AttemptPrompt(std::string_view base_prompt, int attempt_index) {
  std::string prompt(base_prompt);
  if (attempt_index > 1) {
    prompt += " (Attempt " + std::to_string(attempt_index) + ")";
  }
  return prompt;
}

std::vector<GapSpec> PlanGaps(const CoverageState& state, std::size_t budget) {
  const CoverageConfig& config = state.config();
  std::size_t uncovered = state.total_cells() - state.covered_count();
  budget = std::min(budget, uncovered);
  if (budget == 0) return {};

  std::size_t points = 1;
  for (int i = 0; i < config.n; ++i) {
    points *= static_cast<std::size_t>(config.alpha);
    if (points > kMaxPlanningPoints) {
      throw Error(ErrorCode::kInvalidArgument,
                  "feature space too large for gap planning");
    }
  }

  std::vector<std::size_t> score(state.total_cells(), 0);
  std::vector<int> point(static_cast<std::size_t>(config.n), 0);
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t rest = p;
    for (int i = config.n - 1; i >= 0; --i) {
      point[static_cast<std::size_t>(i)] =
          static_cast<int>(rest % static_cast<std::size_t>(config.alpha));
      rest /= static_cast<std::size_t>(config.alpha);
    }
    std::vector<std::size_t> cells = state.CellIndicesOf(point);
    std::size_t gain = 0;
    for (std::size_t c : cells) gain += state.IsCovered(c) ? 0 : 1;
    for (std::size_t c : cells) {
      if (!state.IsCovered(c)) score[c] = std::max(score[c], gain);
    }
  }

  std::vector<std::size_t> order;
  order.reserve(uncovered);
  for (std::size_t c = 0; c < state.total_cells(); ++c) {
    if (!state.IsCovered(c)) order.push_back(c);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return score[a] > score[b];
                   });
  order.resize(budget);

  std::vector<GapSpec> plan;
  plan.reserve(budget);
  for (std::size_t i = 0; i < order.size(); ++i) {
    plan.push_back({state.CellAt(order[i]), static_cast<int>(i)});
  }
  return plan;
}

AugmentResult FillGaps(const TestSuite& suite, CoverageState& state,
                       const AugmentorConfig& config,
                       const Extractor& extractor,
                       const GeneratorService& llm) {
  ValidatePromptTemplate(config.prompt_template);
  if (config.max_attempts_per_gap < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_attempts_per_gap must be at least 1");
  }
  if (config.max_new_sentences < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_new_sentences must be non-negative");
  }

  AugmentResult result;
  result.suite = suite;
  const auto limit = static_cast<std::size_t>(config.max_new_sentences);
  if (limit == 0) return result;

  std::unordered_set<std::string> ids;
  for (const Sentence& s : suite.sentences) ids.insert(s.id);
  std::size_t id_counter = 0;
  auto next_id = [&] {
    std::string id;
    do {
      id = suite.name + ":gen:" + std::to_string(id_counter++);
    } while (ids.contains(id));
    ids.insert(id);
    return id;
  };

  const std::vector<GapSpec> plan = PlanGaps(state, state.total_cells());
  const int window_size = std::max(1, config.max_inflight);
  std::size_t next = 0;

  while (next < plan.size() && result.generated_count < limit) {
    std::vector<std::size_t> window;
    while (next < plan.size() &&
           window.size() < static_cast<std::size_t>(window_size)) {
      if (!state.IsCovered(plan[next].cell)) window.push_back(next);
      ++next;
    }
    if (window.empty()) break;

    std::vector<std::string> prompts;
    prompts.reserve(window.size());
    for (std::size_t w : window) prompts.push_back(BuildPrompt(plan[w], config));

    // First attempts go out together; acceptance below stays in plan order.
    std::vector<Speculative> first = ParallelMap(
        window.size(), window_size, [&](std::size_t i) -> Speculative {
          try {
            return {GenerateOrThrow(llm, prompts[i]), nullptr};
          } catch (...) {
            return {std::string(), std::current_exception()};
          }
        });

    for (std::size_t i = 0; i < window.size(); ++i) {
      if (result.generated_count >= limit) break;
      const GapSpec& gap = plan[window[i]];
      if (state.IsCovered(gap.cell)) continue;

      for (int attempt = 1; attempt <= config.max_attempts_per_gap;
           ++attempt) {
        GenerationAttempt record;
        record.gap = gap;
        record.attempt_index = attempt;
        record.prompt = AttemptPrompt(prompts[i], attempt);
        std::string raw;
        if (attempt == 1) {
          if (first[i].error) std::rethrow_exception(first[i].error);
          raw = std::move(first[i].text);
        } else {
          raw = GenerateOrThrow(llm, record.prompt);
        }
        record.candidate_text = Trim(raw);
        if (!record.candidate_text.empty()) {
          record.extracted = extractor.Extract(record.candidate_text);
          record.accepted = CellMatches(gap.cell, record.extracted);
        }
        result.attempts.push_back(record);
        if (record.accepted) {
          result.suite.sentences.push_back({next_id(), record.candidate_text,
                                            std::nullopt, Origin::kGenerated});
          state.Add(record.extracted);
          ++result.generated_count;
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace emocov
