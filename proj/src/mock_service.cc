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

#include "emocov/mock_service.h"

#include <array>
#include <cctype>
#include <regex>

#include "emocov/error.h"
#include "emocov/extractor.h"
#include "emocov/tokenizer.h"
#include "httplib.h"

namespace emocov {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

CorpusLabel HashLabel(std::string_view model, std::string_view text,
                      std::uint64_t seed) {
  return kAllCorpusLabels[StableHash({model, text}, seed) % kNumCorpusLabels];
}

std::vector<TokenTag> LexiconTags(const Lexicon& lexicon,
                                  std::string_view text) {
  std::vector<TokenTag> tags;
  for (std::string& token : Tokenize(text, /*lowercase=*/true)) {
    const LexiconEntry* e = lexicon.Find(token);
    tags.push_back({std::move(token),
                    e ? e->pos : PartOfSpeech::kOther,
                    e ? e->emotion : Emotion::kNeutral});
  }
  return tags;
}

// Plurality non-neutral emotion over all emotional words of the sentence.
std::optional<Emotion> DominantEmotion(std::span<const TokenTag> tags) {
  std::array<int, kNumEmotions> counts{};
  for (const TokenTag& t : tags) {
    if (t.pos != PartOfSpeech::kOther && t.emotion != Emotion::kNeutral) {
      ++counts[Index(t.emotion)];
    }
  }
  std::optional<Emotion> best;
  int best_count = 0;
  for (Emotion e : kAllEmotions) {
    if (counts[Index(e)] > best_count) {
      best = e;
      best_count = counts[Index(e)];
    }
  }
  return best;
}

bool MixesEmotions(const FeatureVector& fv) {
  std::optional<Emotion> seen;
  for (FeatureKind k : kAllFeatureKinds) {
    Emotion e = fv[k];
    if (e == Emotion::kNeutral) continue;
    if (seen && *seen != e) return true;
    seen = e;
  }
  return false;
}

nlohmann::json ParseBody(const httplib::Request& req) {
  return nlohmann::json::parse(req.body, nullptr, false);
}

void Reply(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(
      body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
      "application/json");
}

void ReplyError(httplib::Response& res, int status, std::string_view message) {
  Reply(res, status, {{"error", std::string(message)}});
}

bool IsStringArray(const nlohmann::json& j) {
  if (!j.is_array()) return false;
  for (const auto& item : j) {
    if (!item.is_string()) return false;
  }
  return true;
}

}  // namespace

std::uint64_t StableHash(std::initializer_list<std::string_view> parts,
                         std::uint64_t seed) {
  std::uint64_t h = kFnvOffset;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= kFnvPrime;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (std::string_view part : parts) {
    mix(0xff);
    for (char c : part) mix(static_cast<unsigned char>(c));
  }
  // splitmix64 finalizer; FNV alone leaves the low bits poorly mixed.
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::string_view ToString(MockModelBehavior b) {
  switch (b) {
    case MockModelBehavior::kHash:
      return "hash";
    case MockModelBehavior::kLexicon:
      return "lexicon";
    case MockModelBehavior::kFaultyLexicon:
      return "faulty_lexicon";
  }
  return "hash";
}

std::optional<MockModelBehavior> ParseMockModelBehavior(std::string_view s) {
  for (auto b : {MockModelBehavior::kHash, MockModelBehavior::kLexicon,
                 MockModelBehavior::kFaultyLexicon}) {
    if (ToString(b) == s) return b;
  }
  return std::nullopt;
}

MockModelService::MockModelService(MockOptions options, const Lexicon& lexicon)
    : options_(std::move(options)), lexicon_(lexicon) {}

bool MockModelService::HasModel(std::string_view model) const {
  return !options_.strict_registry ||
         options_.models.contains(std::string(model));
}

std::vector<WordTag> MockModelService::TagTokens(
    std::span<const std::string> tokens) const {
  std::vector<WordTag> tags;
  tags.reserve(tokens.size());
  for (const std::string& token : tokens) {
    std::vector<std::string> folded = Tokenize(token, /*lowercase=*/true);
    const LexiconEntry* e =
        folded.size() == 1 ? lexicon_.Find(folded.front()) : nullptr;
    tags.push_back(e ? WordTag{e->pos, e->emotion} : WordTag{});
  }
  return tags;
}

CorpusLabel MockModelService::ClassifyOne(std::string_view model,
                                          std::string_view text) const {
  if (!HasModel(model)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown model '" + std::string(model) + "'");
  }
  auto it = options_.models.find(std::string(model));
  MockModelBehavior behavior =
      it == options_.models.end() ? MockModelBehavior::kHash : it->second;
  const std::uint64_t seed = options_.seed;
  if (behavior == MockModelBehavior::kHash) {
    return HashLabel(model, text, seed);
  }

  std::vector<TokenTag> tags = LexiconTags(lexicon_, text);
  std::optional<Emotion> dominant = DominantEmotion(tags);
  if (!dominant) return HashLabel(model, text, seed);
  CorpusLabel label = *ToCorpusLabel(*dominant);

  if (behavior == MockModelBehavior::kLexicon) {
    if (StableHash({"disagree", model, text}, seed) % 10 == 0) {
      return HashLabel(model, text, seed);
    }
    return label;
  }
  if (MixesEmotions(AggregateTags(tags))) {
    return static_cast<CorpusLabel>((Index(label) + 1) % kNumCorpusLabels);
  }
  return label;
}

std::vector<CorpusLabel> MockModelService::Classify(
    std::string_view model, std::span<const std::string> texts) const {
  std::vector<CorpusLabel> labels;
  labels.reserve(texts.size());
  for (const std::string& t : texts) labels.push_back(ClassifyOne(model, t));
  return labels;
}

std::string MockModelService::Generate(std::string_view prompt) const {
  if (IsBlank(prompt)) {
    throw Error(ErrorCode::kInvalidArgument, "empty prompt");
  }
  static const std::regex kPositive(
      R"(\ban?\s+(verb|adjective|adverb|noun)\s+labeled\s+as\s+)"
      R"((joy|anger|sadness|fear|surprise|neutral)\b)");
  static const std::regex kNeutral(
      R"(\bwithout\s+any\s+emotionally\s+charged\s+)"
      R"((verb|adjective|adverb|noun)\b)");

  std::array<std::optional<Emotion>, kNumFeatureKinds> wanted;
  auto constrain = [&](std::string_view kind_text, Emotion e) {
    FeatureKind kind = *ParseFeatureKind(kind_text);
    auto& slot = wanted[Index(kind)];
    if (slot && *slot != e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prompt constrains the " + std::string(kind_text) +
                      " twice");
    }
    slot = e;
  };
  const std::string text(prompt);
  bool any = false;
  for (std::sregex_iterator it(text.begin(), text.end(), kPositive), end;
       it != end; ++it) {
    constrain((*it)[1].str(), *ParseEmotion((*it)[2].str()));
    any = true;
  }
  for (std::sregex_iterator it(text.begin(), text.end(), kNeutral), end;
       it != end; ++it) {
    constrain((*it)[1].str(), Emotion::kNeutral);
    any = true;
  }
  if (!any) {
    throw Error(ErrorCode::kInvalidArgument,
                "prompt carries no part-of-speech constraint");
  }

  std::array<std::string, kNumFeatureKinds> words;
  for (FeatureKind kind : kAllFeatureKinds) {
    const auto& want = wanted[Index(kind)];
    if (!want || *want == Emotion::kNeutral) continue;
    std::vector<std::string_view> candidates = lexicon_.WordsFor(kind, *want);
    if (candidates.empty()) continue;
    std::uint64_t h = StableHash({text, ToString(kind)}, options_.seed);
    words[Index(kind)] = std::string(candidates[h % candidates.size()]);
  }

  auto word_or = [&](FeatureKind k, std::string_view filler) {
    const std::string& w = words[Index(k)];
    return w.empty() ? std::string(filler) : w;
  };
  std::string sentence = "The";
  if (!words[Index(FeatureKind::kAdjective)].empty()) {
    sentence += " " + words[Index(FeatureKind::kAdjective)];
  }
  sentence += " " + word_or(FeatureKind::kNoun, "person");
  sentence += " " + word_or(FeatureKind::kVerb, "acted");
  if (!words[Index(FeatureKind::kAdverb)].empty()) {
    sentence += " " + words[Index(FeatureKind::kAdverb)];
  }
  sentence += ".";
  return sentence;
}

nlohmann::json MockModelService::Health() const {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& [name, behavior] : options_.models) models.push_back(name);
  return {{"mode", "mock"}, {"models", std::move(models)}};
}

MockHttpServer::MockHttpServer(std::shared_ptr<const MockModelService> service)
    : service_(std::move(service)),
      server_(std::make_unique<httplib::Server>()) {
  server_->set_pre_routing_handler(
      [this](const httplib::Request&, httplib::Response& res) {
        ++requests_;
        int remaining = fail_remaining_.load();
        while (remaining > 0 &&
               !fail_remaining_.compare_exchange_weak(remaining,
                                                      remaining - 1)) {
        }
        if (remaining > 0) {
          ReplyError(res, fail_status_.load(), "injected failure");
          return httplib::Server::HandlerResponse::Handled;
        }
        return httplib::Server::HandlerResponse::Unhandled;
      });

  server_->set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        ReplyError(res, 503, "backend failure");
      });

  server_->Post("/classify", [this](const httplib::Request& req,
                                    httplib::Response& res) {
    auto body = ParseBody(req);
    if (!body.is_object() || !body.contains("model") ||
        !body["model"].is_string() || !body.contains("texts") ||
        !IsStringArray(body["texts"])) {
      return ReplyError(res, 400, "expected {model, texts}");
    }
    std::string model = body["model"].get<std::string>();
    if (!service_->HasModel(model)) {
      return ReplyError(res, 404, "unknown model '" + model + "'");
    }
    auto texts = body["texts"].get<std::vector<std::string>>();
    nlohmann::json labels = nlohmann::json::array();
    for (CorpusLabel l : service_->Classify(model, texts)) {
      labels.push_back(ToString(l));
    }
    Reply(res, 200, {{"labels", std::move(labels)}, {"latency_ms", 0}});
  });

  server_->Post("/word-emotions", [this](const httplib::Request& req,
                                         httplib::Response& res) {
    auto body = ParseBody(req);
    if (!body.is_object() || !body.contains("tokens") ||
        !IsStringArray(body["tokens"])) {
      return ReplyError(res, 400, "expected {tokens}");
    }
    auto tokens = body["tokens"].get<std::vector<std::string>>();
    nlohmann::json tags = nlohmann::json::array();
    for (const WordTag& t : service_->TagTokens(tokens)) {
      tags.push_back({{"pos", ToString(t.pos)}, {"emotion", ToString(t.emotion)}});
    }
    Reply(res, 200, {{"tags", std::move(tags)}});
  });

  server_->Post("/generate", [this](const httplib::Request& req,
                                    httplib::Response& res) {
    auto body = ParseBody(req);
    if (!body.is_object() || !body.contains("prompt") ||
        !body["prompt"].is_string()) {
      return ReplyError(res, 400, "expected {prompt}");
    }
    try {
      Reply(res, 200,
            {{"text", service_->Generate(body["prompt"].get<std::string>())}});
    } catch (const Error& e) {
      ReplyError(res, 400, e.what());
    }
  });

  server_->Get("/healthz", [this](const httplib::Request&,
                                  httplib::Response& res) {
    Reply(res, 200, service_->Health());
  });

  port_ = server_->bind_to_any_port("127.0.0.1");
  if (port_ <= 0) {
    throw Error(ErrorCode::kIo, "mock server could not bind a port");
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

MockHttpServer::~MockHttpServer() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockHttpServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

void MockHttpServer::FailNext(int count, int status) {
  fail_status_ = status;
  fail_remaining_ = count;
}

}  // namespace emocov
