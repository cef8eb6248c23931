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

#include "emocov/endpoints.h"

#include <thread>

#include "emocov/error.h"
#include "httplib.h"

namespace emocov {
namespace {

bool IsRetryable(int status) { return status == 429 || status >= 500; }

[[noreturn]] void Unavailable(const std::string& message) {
  throw Error(ErrorCode::kRemoteUnavailable, message);
}

}  // namespace

HttpModelClient::HttpModelClient(std::string base_url,
                                 HttpClientOptions options)
    : base_url_(std::move(base_url)), options_(std::move(options)) {
  if (options_.retry_limit < 1) options_.retry_limit = 1;
  std::string_view url = base_url_;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "endpoint is not an http(s) URL: '" + base_url_ + "'");
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) {
    scheme_host_port_ = std::string(url);
  } else {
    scheme_host_port_ = std::string(url.substr(0, path_start));
    path_prefix_ = std::string(url.substr(path_start));
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
}

nlohmann::json HttpModelClient::Post(const std::string& path,
                                     const nlohmann::json& body,
                                     bool authorize) const {
  const std::string full_path = path_prefix_ + path;
  const std::string payload = body.dump();
  std::string last_error;
  for (int attempt = 1; attempt <= options_.retry_limit; ++attempt) {
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    httplib::Headers headers;
    if (authorize && !options_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + options_.api_key);
    }
    auto res = client.Post(full_path, headers, payload, "application/json");
    if (!res) {
      last_error = "POST " + base_url_ + path + ": " +
                   httplib::to_string(res.error());
    } else if (res->status >= 200 && res->status < 300) {
      auto parsed = nlohmann::json::parse(res->body, nullptr, false);
      if (parsed.is_discarded() || !parsed.is_object()) {
        Unavailable("POST " + base_url_ + path + ": malformed JSON response");
      }
      return parsed;
    } else {
      last_error = "POST " + base_url_ + path + ": HTTP " +
                   std::to_string(res->status);
      if (!IsRetryable(res->status)) Unavailable(last_error);
    }
    if (attempt < options_.retry_limit) {
      std::this_thread::sleep_for(options_.backoff * attempt);
    }
  }
  Unavailable(last_error + " (after " + std::to_string(options_.retry_limit) +
              " attempt(s))");
}

nlohmann::json HttpModelClient::Get(const std::string& path) const {
  std::string last_error;
  for (int attempt = 1; attempt <= options_.retry_limit; ++attempt) {
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    auto res = client.Get(path_prefix_ + path);
    if (!res) {
      last_error = "GET " + base_url_ + path + ": " +
                   httplib::to_string(res.error());
    } else if (res->status >= 200 && res->status < 300) {
      auto parsed = nlohmann::json::parse(res->body, nullptr, false);
      if (parsed.is_discarded()) {
        Unavailable("GET " + base_url_ + path + ": malformed JSON response");
      }
      return parsed;
    } else {
      last_error =
          "GET " + base_url_ + path + ": HTTP " + std::to_string(res->status);
      if (!IsRetryable(res->status)) Unavailable(last_error);
    }
    if (attempt < options_.retry_limit) {
      std::this_thread::sleep_for(options_.backoff * attempt);
    }
  }
  Unavailable(last_error);
}

std::vector<WordTag> HttpModelClient::TagTokens(
    std::span<const std::string> tokens) const {
  nlohmann::json body = {{"tokens", nlohmann::json::array()}};
  for (const std::string& t : tokens) body["tokens"].push_back(t);
  nlohmann::json res = Post("/word-emotions", body, false);
  if (!res.contains("tags") || !res["tags"].is_array() ||
      res["tags"].size() != tokens.size()) {
    Unavailable("/word-emotions: response does not carry one tag per token");
  }
  std::vector<WordTag> tags;
  tags.reserve(tokens.size());
  for (const auto& tag : res["tags"]) {
    auto pos = tag.contains("pos") && tag["pos"].is_string()
                   ? ParsePartOfSpeech(tag["pos"].get<std::string>())
                   : std::nullopt;
    auto emotion = tag.contains("emotion") && tag["emotion"].is_string()
                       ? ParseEmotion(tag["emotion"].get<std::string>())
                       : std::nullopt;
    if (!pos || !emotion) Unavailable("/word-emotions: malformed tag");
    tags.push_back({*pos, *emotion});
  }
  return tags;
}

std::vector<CorpusLabel> HttpModelClient::Classify(
    std::string_view model, std::span<const std::string> texts) const {
  nlohmann::json body = {{"model", std::string(model)},
                         {"texts", nlohmann::json::array()}};
  for (const std::string& t : texts) body["texts"].push_back(t);
  nlohmann::json res = Post("/classify", body, false);
  if (!res.contains("labels") || !res["labels"].is_array() ||
      res["labels"].size() != texts.size()) {
    Unavailable("/classify: response does not carry one label per text");
  }
  std::vector<CorpusLabel> labels;
  labels.reserve(texts.size());
  for (const auto& l : res["labels"]) {
    auto label = l.is_string() ? ParseCorpusLabel(l.get<std::string>())
                               : std::nullopt;
    if (!label) Unavailable("/classify: unknown label " + l.dump());
    labels.push_back(*label);
  }
  return labels;
}

std::string HttpModelClient::Generate(std::string_view prompt) const {
  nlohmann::json res =
      Post("/generate", {{"prompt", std::string(prompt)}}, true);
  if (!res.contains("text") || !res["text"].is_string()) {
    Unavailable("/generate: response has no text");
  }
  return res["text"].get<std::string>();
}

void HttpModelClient::Probe() const { Get("/healthz"); }

nlohmann::json HttpModelClient::Health() const { return Get("/healthz"); }

std::shared_ptr<const HttpModelClient> HttpEndpointResolver::ClientFor(
    const std::string& endpoint) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& client = clients_[endpoint];
  if (!client) client = std::make_shared<HttpModelClient>(endpoint, options_);
  return client;
}

std::shared_ptr<const ClassifierService> HttpEndpointResolver::Classifier(
    const std::string& endpoint) const {
  return ClientFor(endpoint);
}

std::shared_ptr<const GeneratorService> HttpEndpointResolver::Generator(
    const std::string& endpoint) const {
  return ClientFor(endpoint);
}

std::shared_ptr<const WordEmotionService> HttpEndpointResolver::WordTagger(
    const std::string& endpoint) const {
  return ClientFor(endpoint);
}

}  // namespace emocov
