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

#ifndef EMOCOV_HARNESS_H_
#define EMOCOV_HARNESS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "emocov/arbiter.h"
#include "emocov/augmentor.h"
#include "emocov/coverage.h"
#include "emocov/endpoints.h"
#include "emocov/extractor.h"
#include "emocov/feature_model.h"
#include "emocov/rational.h"
#include "json.hpp"

namespace emocov {

struct SutProfile {
  std::string name;
  std::string endpoint;
};

// Consecutive, order-preserving chunks of `size` sentences; the last one may
// be shorter. An empty suite yields no chunks. Chunk i is named
// "<suite.name>#<i>". Throws Error(kInvalidArgument) for size 0.
std::vector<TestSuite> Chunk(const TestSuite& suite, std::size_t size);

struct Prediction {
  std::string sentence_id;
  CorpusLabel predicted = CorpusLabel::kJoy;
  CorpusLabel gold = CorpusLabel::kJoy;
  bool correct = false;
};

struct AccuracyResult {
  Rational accuracy;
  std::vector<Prediction> predictions;
};

// Fraction of sentences the SUT labels with their gold label; 0 for an empty
// suite. Throws Error(kMissingLabel) if a sentence has no gold label and
// Error(kSutUnavailable) if the classifier fails.
AccuracyResult EvaluateAccuracy(const TestSuite& suite, const SutProfile& sut,
                                const ClassifierService& classifier,
                                std::size_t batch_size = 256);

struct SubsetResult {
  std::size_t subset_index = 0;
  bool completed = false;
  // Set when the subset was skipped.
  std::string skip_reason;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  Rational cov_before;
  Rational cov_after;
  Rational acc_before;
  Rational acc_after;
  std::size_t generated_count = 0;
};

struct ExperimentReport {
  int k = 0;
  std::vector<SubsetResult> subsets;
  // Means over completed subsets only.
  Rational mean_cov_delta;
  Rational mean_acc_delta;
  std::size_t completed_count = 0;
  std::size_t skipped_count = 0;
};

// Recomputes the two means from the per-subset rows.
void ComputeMeans(ExperimentReport& report);

struct ExperimentConfig {
  ExtractorConfig extractor;
  CoverageConfig coverage;
  AugmentorConfig augmentor;
  std::vector<ModelProfile> ensemble;
  SutProfile sut;
  std::size_t chunk_size = 200;
  int max_inflight = 4;
};

struct ExperimentOutput {
  ExperimentReport report;
  // One JSON object per line of the corresponding artifact, in order.
  std::vector<nlohmann::json> attempts;
  std::vector<nlohmann::json> verdicts;
  std::vector<nlohmann::json> predictions;
};

// Per subset: baseline coverage and SUT accuracy, gap filling, arbitration of
// the generated sentences, then coverage and accuracy of the augmented
// subset. An endpoint failure inside a subset marks that subset skipped; a
// failed SUT probe at start marks every subset skipped.
ExperimentOutput RunExperiment(const TestSuite& corpus,
                               const ExperimentConfig& config,
                               const Extractor& extractor,
                               const EndpointResolver& resolver);

// Rationals serialize as {"num", "den", "value"} with value rounded to six
// places.
nlohmann::json RationalToJson(const Rational& r);
nlohmann::json ToJson(const ExperimentReport& report);
// Tidy rows: subset_index,metric,phase,value.
std::string ResultsCsv(const ExperimentReport& report);

// Writes report.json, results.csv, attempts.jsonl, verdicts.jsonl and
// predictions.jsonl into `out_dir`, creating it if needed.
void WriteArtifacts(const ExperimentOutput& output,
                    const std::filesystem::path& out_dir);

}  // namespace emocov

#endif  // EMOCOV_HARNESS_H_
