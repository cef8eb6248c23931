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

#include "emocov/extractor.h"

#include <array>
#include <mutex>

#include "emocov/error.h"
#include "emocov/parallel.h"
#include "emocov/tokenizer.h"

namespace emocov {

FeatureVector AggregateTags(std::span<const TokenTag> tags) {
  std::array<std::array<int, kNumEmotions>, kNumFeatureKinds> votes{};
  for (const TokenTag& t : tags) {
    auto kind = ToFeatureKind(t.pos);
    if (!kind || t.emotion == Emotion::kNeutral) continue;
    ++votes[Index(*kind)][Index(t.emotion)];
  }
  FeatureVector fv;
  for (FeatureKind kind : kAllFeatureKinds) {
    const auto& counts = votes[Index(kind)];
    Emotion best = Emotion::kNeutral;
    int best_count = 0;
    for (Emotion e : kAllEmotions) {
      if (counts[Index(e)] > best_count) {
        best = e;
        best_count = counts[Index(e)];
      }
    }
    fv = fv.With(kind, best);
  }
  return fv;
}

Extractor::Extractor(const ExtractorConfig& config) : config_(config) {
  if (config_.backend != ExtractorBackend::kLexicon) {
    throw Error(ErrorCode::kInvalidArgument,
                "remote extractor needs a word-emotion service");
  }
  if (config_.lexicon_path.empty()) {
    lexicon_ = std::shared_ptr<const Lexicon>(&Lexicon::Starter(),
                                              [](const Lexicon*) {});
  } else {
    lexicon_ = std::make_shared<const Lexicon>(
        Lexicon::Load(config_.lexicon_path));
  }
}

Extractor::Extractor(const ExtractorConfig& config,
                     std::shared_ptr<const WordEmotionService> remote)
    : config_(config), remote_(std::move(remote)) {
  config_.backend = ExtractorBackend::kRemote;
  if (!remote_) {
    throw Error(ErrorCode::kInvalidArgument, "null word-emotion service");
  }
}

std::vector<TokenTag> Extractor::TagSentence(std::string_view text) const {
  if (IsBlank(text)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot tag blank text");
  }
  std::vector<std::string> tokens = Tokenize(text, config_.lowercase);
  if (remote_) return TagRemote(std::string(text), std::move(tokens));

  std::vector<TokenTag> tags;
  tags.reserve(tokens.size());
  for (std::string& token : tokens) {
    // Lexicon words are stored lowercased; keep lookups case-insensitive
    // even when the emitted token keeps its case.
    const LexiconEntry* entry =
        config_.lowercase ? lexicon_->Find(token)
                          : lexicon_->Find(Tokenize(token, true).front());
    if (entry) {
      tags.push_back({std::move(token), entry->pos, entry->emotion});
    } else {
      tags.push_back({std::move(token), PartOfSpeech::kOther,
                      Emotion::kNeutral});
    }
  }
  return tags;
}

std::vector<TokenTag> Extractor::TagRemote(
    const std::string& key, std::vector<std::string> tokens) const {
  {
    std::shared_lock lock(cache_mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::vector<WordTag> wire;
  try {
    wire = remote_->TagTokens(tokens);
  } catch (const Error& e) {
    throw Error(ErrorCode::kRemoteUnavailable, e.what());
  }
  if (wire.size() != tokens.size()) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "word-emotion service returned " + std::to_string(wire.size()) +
                    " tags for " + std::to_string(tokens.size()) + " tokens");
  }
  std::vector<TokenTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tags.push_back({std::move(tokens[i]), wire[i].pos, wire[i].emotion});
  }
  std::unique_lock lock(cache_mu_);
  return cache_.try_emplace(key, std::move(tags)).first->second;
}

FeatureVector Extractor::Extract(std::string_view text) const {
  return AggregateTags(TagSentence(text));
}

std::vector<FeatureVector> Extractor::ExtractSuite(
    const TestSuite& suite) const {
  int inflight = remote_ ? config_.max_inflight : 1;
  return ParallelMap(suite.size(), inflight, [&](std::size_t i) {
    return Extract(suite.sentences[i].text);
  });
}

std::unique_ptr<Extractor> MakeExtractor(const ExtractorConfig& config,
                                         const EndpointResolver& resolver) {
  if (config.backend == ExtractorBackend::kLexicon) {
    return std::make_unique<Extractor>(config);
  }
  if (config.endpoint.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "remote extractor backend requires an endpoint");
  }
  return std::make_unique<Extractor>(config,
                                     resolver.WordTagger(config.endpoint));
}

}  // namespace emocov
