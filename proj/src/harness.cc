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

#include "emocov/harness.h"

#include <algorithm>
#include <fstream>

#include "emocov/error.h"

namespace emocov {
namespace {

std::string Dump(const nlohmann::json& j, int indent = -1) {
  return j.dump(indent, ' ', false, nlohmann::json::error_handler_t::replace);
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

std::string JsonLines(const std::vector<nlohmann::json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += Dump(r);
    out += '\n';
  }
  return out;
}

nlohmann::json PredictionJson(std::size_t subset, std::string_view phase,
                              const Prediction& p) {
  return {{"subset_index", subset},
          {"phase", phase},
          {"id", p.sentence_id},
          {"predicted", ToString(p.predicted)},
          {"gold", ToString(p.gold)},
          {"correct", p.correct}};
}

}  // namespace

std::vector<TestSuite> Chunk(const TestSuite& suite, std::size_t size) {
  if (size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "chunk size must be at least 1");
  }
  std::vector<TestSuite> chunks;
  for (std::size_t start = 0; start < suite.size(); start += size) {
    TestSuite chunk;
    chunk.name = suite.name + "#" + std::to_string(chunks.size());
    std::size_t end = std::min(suite.size(), start + size);
    chunk.sentences.assign(suite.sentences.begin() + static_cast<long>(start),
                           suite.sentences.begin() + static_cast<long>(end));
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

AccuracyResult EvaluateAccuracy(const TestSuite& suite, const SutProfile& sut,
                                const ClassifierService& classifier,
                                std::size_t batch_size) {
  for (const Sentence& s : suite.sentences) {
    if (!s.gold_label) {
      throw Error(ErrorCode::kMissingLabel,
                  "sentence '" + s.id + "' has no gold label");
    }
  }
  AccuracyResult result;
  result.accuracy = 0;
  if (suite.empty()) return result;
  batch_size = std::max<std::size_t>(batch_size, 1);

  std::size_t correct = 0;
  for (std::size_t start = 0; start < suite.size(); start += batch_size) {
    std::size_t end = std::min(suite.size(), start + batch_size);
    std::vector<std::string> texts;
    for (std::size_t i = start; i < end; ++i) {
      texts.push_back(suite.sentences[i].text);
    }
    std::vector<CorpusLabel> labels;
    try {
      labels = classifier.Classify(sut.name, texts);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSutUnavailable, e.what());
    }
    if (labels.size() != texts.size()) {
      throw Error(ErrorCode::kSutUnavailable,
                  "SUT returned " + std::to_string(labels.size()) +
                      " labels for " + std::to_string(texts.size()) + " texts");
    }
    for (std::size_t i = start; i < end; ++i) {
      const Sentence& s = suite.sentences[i];
      Prediction p{s.id, labels[i - start], *s.gold_label, false};
      p.correct = p.predicted == p.gold;
      correct += p.correct ? 1 : 0;
      result.predictions.push_back(std::move(p));
    }
  }
  result.accuracy = Rational(correct, suite.size());
  return result;
}

void ComputeMeans(ExperimentReport& report) {
  Rational cov_sum = 0;
  Rational acc_sum = 0;
  report.completed_count = 0;
  report.skipped_count = 0;
  for (const SubsetResult& r : report.subsets) {
    if (!r.completed) {
      ++report.skipped_count;
      continue;
    }
    ++report.completed_count;
    cov_sum += r.cov_after - r.cov_before;
    acc_sum += r.acc_after - r.acc_before;
  }
  if (report.completed_count == 0) {
    report.mean_cov_delta = 0;
    report.mean_acc_delta = 0;
  } else {
    report.mean_cov_delta = cov_sum / report.completed_count;
    report.mean_acc_delta = acc_sum / report.completed_count;
  }
}

ExperimentOutput RunExperiment(const TestSuite& corpus,
                               const ExperimentConfig& config,
                               const Extractor& extractor,
                               const EndpointResolver& resolver) {
  config.coverage.Validate();
  ValidateEnsemble(config.ensemble);
  ValidateSuite(corpus);
  AugmentorConfig augmentor = config.augmentor;
  augmentor.max_inflight = config.max_inflight;
  ValidatePromptTemplate(augmentor.prompt_template);

  ExperimentOutput out;
  out.report.k = config.coverage.k;
  const std::vector<TestSuite> chunks = Chunk(corpus, config.chunk_size);

  auto sut = resolver.Classifier(config.sut.endpoint);
  std::string probe_failure;
  try {
    sut->Probe();
  } catch (const Error& e) {
    probe_failure = std::string(ErrorCodeName(ErrorCode::kSutUnavailable)) +
                    ": " + e.what();
  }

  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const TestSuite& chunk = chunks[i];
    SubsetResult r;
    r.subset_index = i;
    r.size_before = chunk.size();
    r.size_after = chunk.size();
    if (!probe_failure.empty()) {
      r.skip_reason = probe_failure;
      out.report.subsets.push_back(std::move(r));
      continue;
    }

    std::vector<nlohmann::json> attempts, verdicts, predictions;
    try {
      CoverageState state(config.coverage);
      state.AddSuite(extractor.ExtractSuite(chunk));
      r.cov_before = state.Report().cov;

      AccuracyResult before = EvaluateAccuracy(chunk, config.sut, *sut);
      r.acc_before = before.accuracy;

      auto llm = resolver.Generator(augmentor.llm_endpoint);
      AugmentResult aug = FillGaps(chunk, state, augmentor, extractor, *llm);
      for (const GenerationAttempt& a : aug.attempts) {
        nlohmann::json j = ToJson(a);
        j["subset_index"] = i;
        attempts.push_back(std::move(j));
      }

      std::span<Sentence> generated(aug.suite.sentences.data() + chunk.size(),
                                    aug.generated_count);
      std::vector<ArbiterVerdict> labels = ArbitrateBatch(
          generated, config.ensemble, resolver, config.max_inflight);
      for (std::size_t g = 0; g < generated.size(); ++g) {
        generated[g].gold_label = labels[g].label;
        nlohmann::json j = ToJson(labels[g]);
        j["subset_index"] = i;
        j["text"] = generated[g].text;
        verdicts.push_back(std::move(j));
      }

      r.cov_after = state.Report().cov;
      AccuracyResult after = EvaluateAccuracy(aug.suite, config.sut, *sut);
      r.acc_after = after.accuracy;
      r.size_after = aug.suite.size();
      r.generated_count = aug.generated_count;
      r.completed = true;

      for (const Prediction& p : before.predictions) {
        predictions.push_back(PredictionJson(i, "before", p));
      }
      for (const Prediction& p : after.predictions) {
        predictions.push_back(PredictionJson(i, "after", p));
      }
    } catch (const Error& e) {
      if (!IsEndpointError(e.code())) throw;
      r = SubsetResult{};
      r.subset_index = i;
      r.size_before = chunk.size();
      r.size_after = chunk.size();
      r.skip_reason = std::string(ErrorCodeName(e.code())) + ": " + e.what();
      out.report.subsets.push_back(std::move(r));
      continue;
    }
    out.report.subsets.push_back(std::move(r));
    std::move(attempts.begin(), attempts.end(),
              std::back_inserter(out.attempts));
    std::move(verdicts.begin(), verdicts.end(),
              std::back_inserter(out.verdicts));
    std::move(predictions.begin(), predictions.end(),
              std::back_inserter(out.predictions));
  }
  ComputeMeans(out.report);
  return out;
}

nlohmann::json RationalToJson(const Rational& r) {
  return {{"num", NumeratorString(r)},
          {"den", DenominatorString(r)},
          {"value", ToRoundedDouble(r, 6)}};
}

nlohmann::json ToJson(const ExperimentReport& report) {
  nlohmann::json subsets = nlohmann::json::array();
  for (const SubsetResult& r : report.subsets) {
    nlohmann::json j = {{"subset_index", r.subset_index},
                        {"status", r.completed ? "completed" : "skipped"},
                        {"size_before", r.size_before},
                        {"size_after", r.size_after},
                        {"generated_count", r.generated_count}};
    if (r.completed) {
      j["cov_before"] = RationalToJson(r.cov_before);
      j["cov_after"] = RationalToJson(r.cov_after);
      j["acc_before"] = RationalToJson(r.acc_before);
      j["acc_after"] = RationalToJson(r.acc_after);
    } else {
      j["skip_reason"] = r.skip_reason;
    }
    subsets.push_back(std::move(j));
  }
  return {{"k", report.k},
          {"completed", report.completed_count},
          {"skipped", report.skipped_count},
          {"mean_cov_delta", RationalToJson(report.mean_cov_delta)},
          {"mean_acc_delta", RationalToJson(report.mean_acc_delta)},
          {"subsets", std::move(subsets)}};
}

std::string ResultsCsv(const ExperimentReport& report) {
  std::string out = "subset_index,metric,phase,value\n";
  auto row = [&](std::size_t i, std::string_view metric,
                 std::string_view phase, const std::string& value) {
    out += std::to_string(i) + ',' + std::string(metric) + ',' +
           std::string(phase) + ',' + value + '\n';
  };
  for (const SubsetResult& r : report.subsets) {
    if (!r.completed) continue;
    row(r.subset_index, "coverage", "before", ToDecimalString(r.cov_before, 6));
    row(r.subset_index, "coverage", "after", ToDecimalString(r.cov_after, 6));
    row(r.subset_index, "accuracy", "before", ToDecimalString(r.acc_before, 6));
    row(r.subset_index, "accuracy", "after", ToDecimalString(r.acc_after, 6));
    row(r.subset_index, "size", "before", std::to_string(r.size_before));
    row(r.subset_index, "size", "after", std::to_string(r.size_after));
  }
  return out;
}

void WriteArtifacts(const ExperimentOutput& output,
                    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + out_dir.string() + ": " + ec.message());
  }
  WriteFile(out_dir / "report.json", Dump(ToJson(output.report), 2) + "\n");
  WriteFile(out_dir / "results.csv", ResultsCsv(output.report));
  WriteFile(out_dir / "attempts.jsonl", JsonLines(output.attempts));
  WriteFile(out_dir / "verdicts.jsonl", JsonLines(output.verdicts));
  WriteFile(out_dir / "predictions.jsonl", JsonLines(output.predictions));
}

}  // namespace emocov
