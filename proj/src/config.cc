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

#include "emocov/config.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "emocov/error.h"

namespace emocov {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& message) {
  throw Error(ErrorCode::kUsage, "config: " + message);
}

void CheckKeys(const json& obj, std::string_view where,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) Bad(std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      Bad("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

template <typename T>
void Read(const json& obj, const char* key, T& target) {
  if (!obj.contains(key) || obj[key].is_null()) return;
  try {
    target = obj[key].get<T>();
  } catch (const json::exception&) {
    Bad(std::string("'") + key + "' has the wrong type");
  }
}

std::string ResolvePath(const std::string& path,
                        const std::filesystem::path& base_dir) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (base_dir / p).lexically_normal().string();
}

}  // namespace

void RunConfig::Validate() const {
  coverage.Validate();
  if (chunk_size < 1) {
    throw Error(ErrorCode::kUsage, "chunk_size must be at least 1");
  }
  if (max_inflight < 1) {
    throw Error(ErrorCode::kUsage, "max_inflight must be at least 1");
  }
  if (extractor.backend == ExtractorBackend::kRemote &&
      extractor.endpoint.empty()) {
    throw Error(ErrorCode::kUsage, "remote extractor needs an endpoint");
  }
  ValidateEnsemble(ensemble);
  ValidatePromptTemplate(augmentor.prompt_template);
  if (augmentor.max_attempts_per_gap < 1 || augmentor.max_new_sentences < 0) {
    throw Error(ErrorCode::kUsage,
                "augmentor needs max_attempts_per_gap >= 1 and "
                "max_new_sentences >= 0");
  }
}

ExperimentConfig RunConfig::ToExperimentConfig() const {
  ExperimentConfig e;
  e.extractor = extractor;
  e.extractor.max_inflight = max_inflight;
  e.coverage = coverage;
  e.augmentor = augmentor;
  e.augmentor.max_inflight = max_inflight;
  e.ensemble = ensemble;
  e.sut = sut;
  e.chunk_size = chunk_size;
  e.max_inflight = max_inflight;
  return e;
}

RunConfig DefaultRunConfig() {
  RunConfig c;
  c.extractor.endpoint = kDefaultEndpoint;
  c.augmentor.llm_endpoint = kDefaultEndpoint;
  c.ensemble = DefaultEnsemble(kDefaultEndpoint);
  c.sut = {"sut", kDefaultEndpoint};
  return c;
}

RunConfig RunConfigFromJson(const json& root,
                            const std::filesystem::path& base_dir) {
  CheckKeys(root, "config",
            {"corpus", "corpus_format", "chunk_size", "output_dir",
             "mock_mode", "max_inflight", "endpoint", "extractor", "coverage",
             "augmentor", "ensemble", "sut", "mock"});
  RunConfig c = DefaultRunConfig();

  std::string endpoint = kDefaultEndpoint;
  Read(root, "endpoint", endpoint);
  c.extractor.endpoint = endpoint;
  c.augmentor.llm_endpoint = endpoint;
  c.sut.endpoint = endpoint;
  c.ensemble = DefaultEnsemble(endpoint);

  Read(root, "corpus", c.corpus_path);
  c.corpus_path = ResolvePath(c.corpus_path, base_dir);
  if (root.contains("corpus_format")) {
    std::string fmt;
    Read(root, "corpus_format", fmt);
    c.corpus_format = ParseCorpusFormat(fmt);
    if (!c.corpus_format) Bad("unknown corpus_format '" + fmt + "'");
  }
  long long chunk = static_cast<long long>(c.chunk_size);
  Read(root, "chunk_size", chunk);
  if (chunk < 1) Bad("chunk_size must be at least 1");
  c.chunk_size = static_cast<std::size_t>(chunk);
  Read(root, "output_dir", c.output_dir);
  c.output_dir = ResolvePath(c.output_dir, base_dir);
  Read(root, "mock_mode", c.mock_mode);
  Read(root, "max_inflight", c.max_inflight);

  if (root.contains("extractor")) {
    const json& e = root["extractor"];
    CheckKeys(e, "extractor",
              {"backend", "lexicon_path", "endpoint", "lowercase",
               "retry_limit"});
    std::string backend = "lexicon";
    Read(e, "backend", backend);
    if (backend == "lexicon") {
      c.extractor.backend = ExtractorBackend::kLexicon;
    } else if (backend == "remote") {
      c.extractor.backend = ExtractorBackend::kRemote;
    } else {
      Bad("unknown extractor backend '" + backend + "'");
    }
    Read(e, "lexicon_path", c.extractor.lexicon_path);
    c.extractor.lexicon_path = ResolvePath(c.extractor.lexicon_path, base_dir);
    Read(e, "endpoint", c.extractor.endpoint);
    Read(e, "lowercase", c.extractor.lowercase);
    Read(e, "retry_limit", c.extractor.retry_limit);
  }

  if (root.contains("coverage")) {
    const json& cov = root["coverage"];
    CheckKeys(cov, "coverage", {"k"});
    Read(cov, "k", c.coverage.k);
  }

  if (root.contains("augmentor")) {
    const json& a = root["augmentor"];
    CheckKeys(a, "augmentor",
              {"llm_endpoint", "max_attempts_per_gap", "max_new_sentences",
               "prompt_template"});
    Read(a, "llm_endpoint", c.augmentor.llm_endpoint);
    Read(a, "max_attempts_per_gap", c.augmentor.max_attempts_per_gap);
    Read(a, "max_new_sentences", c.augmentor.max_new_sentences);
    Read(a, "prompt_template", c.augmentor.prompt_template);
  }

  if (root.contains("ensemble")) {
    try {
      c.ensemble = EnsembleFromJson(root["ensemble"], endpoint);
    } catch (const Error& e) {
      Bad(e.what());
    }
  }

  if (root.contains("sut")) {
    const json& s = root["sut"];
    CheckKeys(s, "sut", {"name", "endpoint"});
    Read(s, "name", c.sut.name);
    Read(s, "endpoint", c.sut.endpoint);
  }

  if (root.contains("mock")) {
    const json& m = root["mock"];
    CheckKeys(m, "mock", {"seed", "models", "strict_registry"});
    Read(m, "seed", c.mock.seed);
    Read(m, "strict_registry", c.mock.strict_registry);
    if (m.contains("models")) {
      if (!m["models"].is_object()) Bad("mock.models must be an object");
      for (const auto& [name, value] : m["models"].items()) {
        auto behavior = value.is_string()
                            ? ParseMockModelBehavior(value.get<std::string>())
                            : std::nullopt;
        if (!behavior) Bad("unknown mock behavior for '" + name + "'");
        c.mock.models[name] = *behavior;
      }
    }
  }
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kUsage, "cannot read config " + path.string());
  }
  json root = json::parse(in, nullptr, false);
  if (root.is_discarded()) {
    throw Error(ErrorCode::kUsage, path.string() + " is not valid JSON");
  }
  return RunConfigFromJson(root, path.parent_path());
}

MockOptions EffectiveMockOptions(const RunConfig& config) {
  MockOptions options = config.mock;
  for (const ModelProfile& m : config.ensemble) {
    options.models.try_emplace(m.name, MockModelBehavior::kLexicon);
  }
  options.models.try_emplace(config.sut.name,
                             MockModelBehavior::kFaultyLexicon);
  return options;
}

std::unique_ptr<EndpointResolver> MakeResolver(const RunConfig& config) {
  if (config.mock_mode) {
    // The mock generator draws from the same lexicon the extractor uses.
    Lexicon lexicon = config.extractor.lexicon_path.empty()
                          ? Lexicon::Starter()
                          : Lexicon::Load(config.extractor.lexicon_path);
    auto service = std::make_shared<const MockModelService>(
        EffectiveMockOptions(config), lexicon);
    return std::make_unique<FixedEndpointResolver<MockModelService>>(service);
  }
  HttpClientOptions options;
  options.retry_limit = std::max(1, config.extractor.retry_limit);
  if (const char* key = std::getenv(kApiKeyEnv)) options.api_key = key;
  return std::make_unique<HttpEndpointResolver>(options);
}

}  // namespace emocov
