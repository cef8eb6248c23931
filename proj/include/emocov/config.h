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

#ifndef EMOCOV_CONFIG_H_
#define EMOCOV_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emocov/arbiter.h"
#include "emocov/augmentor.h"
#include "emocov/corpus_io.h"
#include "emocov/coverage.h"
#include "emocov/endpoints.h"
#include "emocov/extractor.h"
#include "emocov/harness.h"
#include "emocov/mock_service.h"
#include "json.hpp"

namespace emocov {

inline constexpr char kDefaultEndpoint[] = "http://127.0.0.1:8000";
inline constexpr char kApiKeyEnv[] = "EMOCOV_LLM_API_KEY";

struct RunConfig {
  std::string corpus_path;
  std::optional<CorpusFormat> corpus_format;
  ExtractorConfig extractor;
  CoverageConfig coverage;
  AugmentorConfig augmentor;
  std::vector<ModelProfile> ensemble;
  SutProfile sut;
  std::size_t chunk_size = 200;
  std::string output_dir = "out";
  bool mock_mode = false;
  MockOptions mock;
  int max_inflight = 4;

  void Validate() const;
  ExperimentConfig ToExperimentConfig() const;
};

// Defaults: lexicon extractor, k=2, the six reference models, every endpoint
// at kDefaultEndpoint.
RunConfig DefaultRunConfig();

// Overlays `json` on the defaults. Relative paths (corpus, lexicon_path,
// output_dir) resolve against `base_dir`. Unknown keys are rejected with
// Error(kUsage).
RunConfig RunConfigFromJson(const nlohmann::json& json,
                            const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Mock options with defaults filled in: ensemble members not listed behave
// as kLexicon and an unlisted SUT as kFaultyLexicon.
MockOptions EffectiveMockOptions(const RunConfig& config);

// The in-process mock in mock mode, HTTP clients otherwise. The LLM API key
// comes from the EMOCOV_LLM_API_KEY environment variable.
std::unique_ptr<EndpointResolver> MakeResolver(const RunConfig& config);

}  // namespace emocov

#endif  // EMOCOV_CONFIG_H_
