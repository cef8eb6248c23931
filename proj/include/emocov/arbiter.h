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

#ifndef EMOCOV_ARBITER_H_
#define EMOCOV_ARBITER_H_

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emocov/endpoints.h"
#include "emocov/feature_model.h"
#include "emocov/rational.h"
#include "json.hpp"

namespace emocov {

struct ModelProfile {
  std::string name;
  std::string endpoint;
  // Dataset accuracy used as the vote weight, in (0, 1].
  Rational accuracy;
};

// The six reference emotion classifiers and their dataset accuracies.
std::vector<ModelProfile> DefaultEnsemble(const std::string& endpoint);

// Throws Error(kInvalidArgument) for an empty ensemble, duplicate names or an
// accuracy outside (0, 1].
void ValidateEnsemble(std::span<const ModelProfile> ensemble);

// Reads [{name, endpoint, accuracy}]. Accuracy may be a JSON number or a
// string ("0.931", "931/1000"); either way it is taken as the exact decimal
// written. A missing endpoint falls back to `default_endpoint`.
std::vector<ModelProfile> EnsembleFromJson(const nlohmann::json& json,
                                           const std::string& default_endpoint);
std::vector<ModelProfile> LoadEnsemble(const std::filesystem::path& path,
                                       const std::string& default_endpoint);

struct ArbiterVerdict {
  std::string sentence_id;
  std::map<std::string, CorpusLabel> per_model;
  // Indexed by CorpusLabel.
  std::array<Rational, kNumCorpusLabels> scores;
  CorpusLabel label = CorpusLabel::kJoy;
  // Winning score minus the runner-up score.
  Rational margin;
};

nlohmann::json ToJson(const ArbiterVerdict& verdict);

// Accuracy-weighted hard-label vote. predictions[i] is the label of
// ensemble[i]. Ties go to the earlier label in canonical order.
ArbiterVerdict TallyVotes(std::string sentence_id,
                          std::span<const ModelProfile> ensemble,
                          std::span<const CorpusLabel> predictions);

// Asks every ensemble member for a label (concurrently) and tallies. Throws
// Error(kEnsembleUnavailable) if any member fails; no verdict is formed from
// a partial ensemble.
ArbiterVerdict Arbitrate(const std::string& sentence_id,
                         const std::string& text,
                         std::span<const ModelProfile> ensemble,
                         const EndpointResolver& resolver);

// Batch form: one /classify request per model carrying every text, with at
// most `max_inflight` models queried at once. Verdicts follow input order.
std::vector<ArbiterVerdict> ArbitrateBatch(
    std::span<const Sentence> sentences,
    std::span<const ModelProfile> ensemble, const EndpointResolver& resolver,
    int max_inflight);

}  // namespace emocov

#endif  // EMOCOV_ARBITER_H_
