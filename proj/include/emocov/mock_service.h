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

#ifndef EMOCOV_MOCK_SERVICE_H_
#define EMOCOV_MOCK_SERVICE_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "emocov/endpoints.h"
#include "emocov/lexicon.h"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace emocov {

enum class MockModelBehavior {
  // label = hash(text, model, seed) over the six corpus labels.
  kHash,
  // Plurality emotion of the sentence's lexicon words, falling back to the
  // hash label when the sentence has no emotional word. One text in ten
  // (chosen by hash) gets the hash label instead, so ensemble members
  // disagree now and then.
  kLexicon,
  // kLexicon without the random disagreement, except that sentences whose
  // feature vector mixes two different non-neutral emotions are pushed to
  // the next label in canonical order. Stands in for a classifier with a
  // fault region.
  kFaultyLexicon,
};

std::string_view ToString(MockModelBehavior b);
std::optional<MockModelBehavior> ParseMockModelBehavior(std::string_view s);

struct MockOptions {
  std::uint64_t seed = 0;
  // Unlisted models behave as kHash unless `strict_registry` is set, in
  // which case they are rejected (HTTP 404).
  std::map<std::string, MockModelBehavior> models;
  bool strict_registry = false;
};

// Deterministic, offline implementation of the model-service contract.
// Every response is a pure function of the request and the seed.
//
// /generate parses the constraint clauses of a canonical prompt ("a verb
// labeled as sadness", "without any emotionally charged adverb") and
// assembles a sentence from lexicon words that satisfies them. A constraint
// the lexicon cannot satisfy is left out of the sentence.
class MockModelService : public WordEmotionService,
                         public ClassifierService,
                         public GeneratorService {
 public:
  explicit MockModelService(MockOptions options,
                            const Lexicon& lexicon = Lexicon::Starter());

  std::vector<WordTag> TagTokens(
      std::span<const std::string> tokens) const override;
  // Throws Error(kInvalidArgument) for an unknown model under a strict
  // registry.
  std::vector<CorpusLabel> Classify(
      std::string_view model,
      std::span<const std::string> texts) const override;
  // Throws Error(kInvalidArgument) for an empty or constraint-free prompt,
  // or one constraining a kind twice.
  std::string Generate(std::string_view prompt) const override;

  CorpusLabel ClassifyOne(std::string_view model, std::string_view text) const;
  bool HasModel(std::string_view model) const;
  nlohmann::json Health() const;

  const MockOptions& options() const { return options_; }
  const Lexicon& lexicon() const { return lexicon_; }

 private:
  MockOptions options_;
  Lexicon lexicon_;
};

// 64-bit FNV-1a over the parts, separated by 0xff bytes, mixed with `seed`.
std::uint64_t StableHash(std::initializer_list<std::string_view> parts,
                         std::uint64_t seed);

// Serves a MockModelService over HTTP on 127.0.0.1 for the lifetime of the
// object.
class MockHttpServer {
 public:
  explicit MockHttpServer(std::shared_ptr<const MockModelService> service);
  ~MockHttpServer();
  MockHttpServer(const MockHttpServer&) = delete;
  MockHttpServer& operator=(const MockHttpServer&) = delete;

  int port() const { return port_; }
  std::string base_url() const;

  // The next `count` requests are answered with `status` and an empty body.
  void FailNext(int count, int status);
  std::size_t request_count() const { return requests_.load(); }

 private:
  std::shared_ptr<const MockModelService> service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> fail_remaining_{0};
  std::atomic<int> fail_status_{503};
  std::atomic<std::size_t> requests_{0};
};

}  // namespace emocov

#endif  // EMOCOV_MOCK_SERVICE_H_
