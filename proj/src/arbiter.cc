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

#include "emocov/arbiter.h"

#include <fstream>
#include <unordered_set>

#include "emocov/error.h"
#include "emocov/parallel.h"

namespace emocov {

std::vector<ModelProfile> DefaultEnsemble(const std::string& endpoint) {
  return {
      {"roberta-base-emotion", endpoint, ParseRational("0.931")},
      {"bert-base-uncased-emotion", endpoint, ParseRational("0.926")},
      {"bertweet-base-finetuned-emotion", endpoint, ParseRational("0.929")},
      {"xtremedistil-emotion", endpoint, ParseRational("0.926")},
      {"bertweet-emotion-base", endpoint, ParseRational("0.928")},
      {"sagemaker-roberta-base-emotion", endpoint, ParseRational("0.931")},
  };
}

void ValidateEnsemble(std::span<const ModelProfile> ensemble) {
  if (ensemble.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ensemble is empty");
  }
  std::unordered_set<std::string> names;
  for (const ModelProfile& m : ensemble) {
    if (m.name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "ensemble model without name");
    }
    if (!names.insert(m.name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate ensemble model '" + m.name + "'");
    }
    if (m.accuracy <= 0 || m.accuracy > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "accuracy of '" + m.name + "' must be in (0, 1], got " +
                      ToFractionString(m.accuracy));
    }
  }
}

std::vector<ModelProfile> EnsembleFromJson(
    const nlohmann::json& json, const std::string& default_endpoint) {
  if (!json.is_array()) {
    throw Error(ErrorCode::kParse, "ensemble must be a JSON array");
  }
  std::vector<ModelProfile> ensemble;
  for (const auto& item : json) {
    if (!item.is_object() || !item.contains("name") ||
        !item["name"].is_string() || !item.contains("accuracy")) {
      throw Error(ErrorCode::kParse,
                  "ensemble entries need {name, accuracy}: " + item.dump());
    }
    ModelProfile m;
    m.name = item["name"].get<std::string>();
    m.endpoint = item.contains("endpoint") && item["endpoint"].is_string()
                     ? item["endpoint"].get<std::string>()
                     : default_endpoint;
    const auto& acc = item["accuracy"];
    if (acc.is_string()) {
      m.accuracy = ParseRational(acc.get<std::string>());
    } else if (acc.is_number_integer()) {
      m.accuracy = Rational(acc.get<long long>());
    } else if (acc.is_number()) {
      m.accuracy = RationalFromDouble(acc.get<double>());
    } else {
      throw Error(ErrorCode::kParse, "accuracy of '" + m.name +
                                         "' is not a number");
    }
    ensemble.push_back(std::move(m));
  }
  ValidateEnsemble(ensemble);
  return ensemble;
}

std::vector<ModelProfile> LoadEnsemble(const std::filesystem::path& path,
                                       const std::string& default_endpoint) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  auto json = nlohmann::json::parse(in, nullptr, false);
  if (json.is_discarded()) {
    throw Error(ErrorCode::kParse, path.string() + " is not valid JSON");
  }
  if (json.is_object() && json.contains("ensemble")) json = json["ensemble"];
  return EnsembleFromJson(json, default_endpoint);
}

nlohmann::json ToJson(const ArbiterVerdict& verdict) {
  nlohmann::json per_model = nlohmann::json::object();
  for (const auto& [name, label] : verdict.per_model) {
    per_model[name] = ToString(label);
  }
  nlohmann::json scores = nlohmann::json::object();
  for (CorpusLabel l : kAllCorpusLabels) {
    if (verdict.scores[Index(l)] != 0) {
      scores[std::string(ToString(l))] =
          ToFractionString(verdict.scores[Index(l)]);
    }
  }
  return {{"sentence_id", verdict.sentence_id},
          {"per_model", std::move(per_model)},
          {"scores", std::move(scores)},
          {"label", ToString(verdict.label)},
          {"margin", ToFractionString(verdict.margin)}};
}

ArbiterVerdict TallyVotes(std::string sentence_id,
                          std::span<const ModelProfile> ensemble,
                          std::span<const CorpusLabel> predictions) {
  ValidateEnsemble(ensemble);
  if (predictions.size() != ensemble.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one prediction per ensemble member required");
  }
  ArbiterVerdict v;
  v.sentence_id = std::move(sentence_id);
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    v.per_model[ensemble[i].name] = predictions[i];
    v.scores[Index(predictions[i])] += ensemble[i].accuracy;
  }
  std::size_t best = 0;
  for (std::size_t l = 1; l < v.scores.size(); ++l) {
    if (v.scores[l] > v.scores[best]) best = l;
  }
  Rational runner_up = 0;
  for (std::size_t l = 0; l < v.scores.size(); ++l) {
    if (l != best && v.scores[l] > runner_up) runner_up = v.scores[l];
  }
  v.label = static_cast<CorpusLabel>(best);
  v.margin = v.scores[best] - runner_up;
  return v;
}

ArbiterVerdict Arbitrate(const std::string& sentence_id,
                         const std::string& text,
                         std::span<const ModelProfile> ensemble,
                         const EndpointResolver& resolver) {
  Sentence s{sentence_id, text, std::nullopt, Origin::kGenerated};
  return ArbitrateBatch(std::span<const Sentence>(&s, 1), ensemble, resolver,
                        static_cast<int>(ensemble.size()))
      .front();
}

std::vector<ArbiterVerdict> ArbitrateBatch(
    std::span<const Sentence> sentences,
    std::span<const ModelProfile> ensemble, const EndpointResolver& resolver,
    int max_inflight) {
  ValidateEnsemble(ensemble);
  if (sentences.empty()) return {};
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const Sentence& s : sentences) texts.push_back(s.text);

  std::vector<std::vector<CorpusLabel>> by_model;
  try {
    by_model = ParallelMap(ensemble.size(), max_inflight, [&](std::size_t m) {
      auto labels =
          resolver.Classifier(ensemble[m].endpoint)->Classify(ensemble[m].name,
                                                              texts);
      if (labels.size() != texts.size()) {
        throw Error(ErrorCode::kRemoteUnavailable,
                    "model '" + ensemble[m].name + "' returned " +
                        std::to_string(labels.size()) + " labels for " +
                        std::to_string(texts.size()) + " texts");
      }
      return labels;
    });
  } catch (const Error& e) {
    throw Error(ErrorCode::kEnsembleUnavailable, e.what());
  }

  std::vector<ArbiterVerdict> verdicts;
  verdicts.reserve(sentences.size());
  std::vector<CorpusLabel> votes(ensemble.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    for (std::size_t m = 0; m < ensemble.size(); ++m) votes[m] = by_model[m][i];
    verdicts.push_back(TallyVotes(sentences[i].id, ensemble, votes));
  }
  return verdicts;
}

}  // namespace emocov
