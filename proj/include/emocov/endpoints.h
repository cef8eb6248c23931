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

#ifndef EMOCOV_ENDPOINTS_H_
#define EMOCOV_ENDPOINTS_H_

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emocov/feature_model.h"
#include "emocov/lexicon.h"
#include "json.hpp"

namespace emocov {

// Wire contract of the model service:
//
//   POST /classify       {model, texts}  -> {labels, latency_ms}
//   POST /word-emotions  {tokens}        -> {tags: [{pos, emotion}]}
//   POST /generate       {prompt}        -> {text}
//   GET  /healthz                        -> {mode, models}
//
// Every implementation below must be safe to call from several threads.

struct WordTag {
  PartOfSpeech pos = PartOfSpeech::kOther;
  Emotion emotion = Emotion::kNeutral;

  friend bool operator==(const WordTag&, const WordTag&) = default;
};

class WordEmotionService {
 public:
  virtual ~WordEmotionService() = default;
  // One tag per token, in order.
  virtual std::vector<WordTag> TagTokens(
      std::span<const std::string> tokens) const = 0;
};

class ClassifierService {
 public:
  virtual ~ClassifierService() = default;
  // One label per text, in order.
  virtual std::vector<CorpusLabel> Classify(
      std::string_view model, std::span<const std::string> texts) const = 0;
  // Throws when the service cannot be reached.
  virtual void Probe() const {}
};

class GeneratorService {
 public:
  virtual ~GeneratorService() = default;
  virtual std::string Generate(std::string_view prompt) const = 0;
};

struct HttpClientOptions {
  // Total attempts per request, at least 1.
  int retry_limit = 3;
  std::chrono::milliseconds backoff{200};
  std::chrono::seconds timeout{60};
  // Sent as a bearer token on /generate only.
  std::string api_key;
};

// Client for one service base URL ("http://host:port[/prefix]").
//
// Connection failures, 429 and 5xx responses are retried up to
// `retry_limit` attempts; other non-2xx statuses fail at once. All failures
// surface as Error(kRemoteUnavailable); callers remap the code to their own
// endpoint error.
class HttpModelClient : public WordEmotionService,
                        public ClassifierService,
                        public GeneratorService {
 public:
  HttpModelClient(std::string base_url, HttpClientOptions options);

  std::vector<WordTag> TagTokens(
      std::span<const std::string> tokens) const override;
  std::vector<CorpusLabel> Classify(
      std::string_view model,
      std::span<const std::string> texts) const override;
  std::string Generate(std::string_view prompt) const override;
  void Probe() const override;

  nlohmann::json Health() const;

  const std::string& base_url() const { return base_url_; }

 private:
  nlohmann::json Post(const std::string& path, const nlohmann::json& body,
                      bool authorize) const;
  nlohmann::json Get(const std::string& path) const;

  std::string base_url_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  HttpClientOptions options_;
};

// Resolves endpoint URLs from configuration to service implementations.
class EndpointResolver {
 public:
  virtual ~EndpointResolver() = default;
  virtual std::shared_ptr<const ClassifierService> Classifier(
      const std::string& endpoint) const = 0;
  virtual std::shared_ptr<const GeneratorService> Generator(
      const std::string& endpoint) const = 0;
  virtual std::shared_ptr<const WordEmotionService> WordTagger(
      const std::string& endpoint) const = 0;
};

// One HttpModelClient per distinct endpoint, created on first use.
class HttpEndpointResolver : public EndpointResolver {
 public:
  explicit HttpEndpointResolver(HttpClientOptions options)
      : options_(std::move(options)) {}

  std::shared_ptr<const ClassifierService> Classifier(
      const std::string& endpoint) const override;
  std::shared_ptr<const GeneratorService> Generator(
      const std::string& endpoint) const override;
  std::shared_ptr<const WordEmotionService> WordTagger(
      const std::string& endpoint) const override;

 private:
  std::shared_ptr<const HttpModelClient> ClientFor(
      const std::string& endpoint) const;

  HttpClientOptions options_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const HttpModelClient>>
      clients_;
};

// Every endpoint resolves to the same in-process implementation.
template <typename Service>
class FixedEndpointResolver : public EndpointResolver {
 public:
  explicit FixedEndpointResolver(std::shared_ptr<const Service> service)
      : service_(std::move(service)) {}

  std::shared_ptr<const ClassifierService> Classifier(
      const std::string&) const override {
    return service_;
  }
  std::shared_ptr<const GeneratorService> Generator(
      const std::string&) const override {
    return service_;
  }
  std::shared_ptr<const WordEmotionService> WordTagger(
      const std::string&) const override {
    return service_;
  }

 private:
  std::shared_ptr<const Service> service_;
};

}  // namespace emocov

#endif  // EMOCOV_ENDPOINTS_H_
