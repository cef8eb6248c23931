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

#ifndef EMOCOV_EXTRACTOR_H_
#define EMOCOV_EXTRACTOR_H_

#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocov/endpoints.h"
#include "emocov/feature_model.h"
#include "emocov/lexicon.h"

namespace emocov {

struct TokenTag {
  std::string token;
  PartOfSpeech pos = PartOfSpeech::kOther;
  Emotion emotion = Emotion::kNeutral;

  friend bool operator==(const TokenTag&, const TokenTag&) = default;
};

enum class ExtractorBackend { kLexicon, kRemote };

struct ExtractorConfig {
  ExtractorBackend backend = ExtractorBackend::kLexicon;
  // Empty selects the built-in starter lexicon.
  std::string lexicon_path;
  // Base URL of a service implementing /word-emotions.
  std::string endpoint;
  bool lowercase = true;
  int retry_limit = 3;
  int max_inflight = 4;
};

// Folds per-token tags into one emotion per feature kind: plurality among
// the non-neutral emotions of that part of speech, ties going to the
// earlier emotion in canonical order. Kinds with no emotional token are
// neutral. Tags with pos=other are ignored.
FeatureVector AggregateTags(std::span<const TokenTag> tags);

// Maps sentence text to its feature vector.
//
// The lexicon backend is pure. The remote backend asks a /word-emotions
// service for tags and memoizes responses per sentence text for the lifetime
// of the Extractor; the cache is shared between threads.
class Extractor {
 public:
  // Lexicon backend. Throws Error(kIo) / Error(kLexiconParse) on a bad
  // lexicon_path.
  explicit Extractor(const ExtractorConfig& config);

  // Remote backend over an injected service.
  Extractor(const ExtractorConfig& config,
            std::shared_ptr<const WordEmotionService> remote);

  // Throws Error(kInvalidArgument) on blank text and Error(kRemoteUnavailable)
  // when the remote backend fails.
  std::vector<TokenTag> TagSentence(std::string_view text) const;
  FeatureVector Extract(std::string_view text) const;

  // Extracts every sentence of the suite, in order, with at most
  // config.max_inflight concurrent requests.
  std::vector<FeatureVector> ExtractSuite(const TestSuite& suite) const;

  const ExtractorConfig& config() const { return config_; }
  // Null for the remote backend.
  const Lexicon* lexicon() const { return lexicon_.get(); }

 private:
  std::vector<TokenTag> TagRemote(const std::string& key,
                                  std::vector<std::string> tokens) const;

  ExtractorConfig config_;
  std::shared_ptr<const Lexicon> lexicon_;
  std::shared_ptr<const WordEmotionService> remote_;

  mutable std::shared_mutex cache_mu_;
  mutable std::unordered_map<std::string, std::vector<TokenTag>> cache_;
};

// Builds the extractor for `config`, resolving the remote endpoint through
// `resolver` when the backend is remote.
std::unique_ptr<Extractor> MakeExtractor(const ExtractorConfig& config,
                                         const EndpointResolver& resolver);

}  // namespace emocov

#endif  // EMOCOV_EXTRACTOR_H_
