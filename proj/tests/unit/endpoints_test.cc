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

#include <map>
#include <mutex>
#include <thread>

#include "emocov/error.h"
#include "emocov/extractor.h"
#include "emocov/mock_service.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "httplib.h"

namespace emocov {
namespace {

using nlohmann::json;

HttpClientOptions FastOptions(int retries = 3) {
  HttpClientOptions o;
  o.retry_limit = retries;
  o.backoff = std::chrono::milliseconds(1);
  o.timeout = std::chrono::seconds(5);
  return o;
}

class HttpClientTest : public ::testing::Test {
 protected:
  HttpClientTest()
      : service_(std::make_shared<const MockModelService>(
            MockOptions{9, {{"sut", MockModelBehavior::kFaultyLexicon}}, false})),
        server_(service_),
        client_(server_.base_url(), FastOptions()) {}

  json RawPost(const std::string& path, const std::string& body,
               int* status) {
    httplib::Client c("127.0.0.1", server_.port());
    auto res = c.Post(path, body, "application/json");
    *status = res ? res->status : -1;
    return res ? json::parse(res->body, nullptr, false) : json();
  }

  std::shared_ptr<const MockModelService> service_;
  MockHttpServer server_;
  HttpModelClient client_;
};

TEST_F(HttpClientTest, WordEmotions) {
  std::vector<std::string> tokens = {"laughed", "nervously", "xylophone",
                                     "Tears"};
  std::vector<WordTag> tags = client_.TagTokens(tokens);
  ASSERT_EQ(tags.size(), 4u);
  EXPECT_EQ(tags[0], (WordTag{PartOfSpeech::kVerb, Emotion::kJoy}));
  EXPECT_EQ(tags[1], (WordTag{PartOfSpeech::kAdverb, Emotion::kFear}));
  EXPECT_EQ(tags[2], (WordTag{PartOfSpeech::kOther, Emotion::kNeutral}));
  EXPECT_EQ(tags[3], (WordTag{PartOfSpeech::kNoun, Emotion::kSadness}));
  EXPECT_TRUE(client_.TagTokens({}).empty());
}

TEST_F(HttpClientTest, ClassifyMatchesInProcessService) {
  std::vector<std::string> texts = {"a", "a", "she laughed", "b"};
  for (const char* model : {"roberta-base-emotion", "sut"}) {
    std::vector<CorpusLabel> remote = client_.Classify(model, texts);
    EXPECT_EQ(remote, service_->Classify(model, texts));
    EXPECT_EQ(remote[0], remote[1]);
  }
  EXPECT_EQ(client_.Classify("sut", std::vector<std::string>{"she laughed"})[0],
            CorpusLabel::kJoy);
}

TEST_F(HttpClientTest, GenerateSatisfiesConstraints) {
  std::string text = client_.Generate(
      "Generate a sentence with a verb labeled as sadness and an adverb "
      "labeled as joy");
  Extractor ex{ExtractorConfig{}};
  FeatureVector fv = ex.Extract(text);
  EXPECT_EQ(fv.verb(), Emotion::kSadness);
  EXPECT_EQ(fv.adverb(), Emotion::kJoy);
}

TEST_F(HttpClientTest, HealthAndProbe) {
  json h = client_.Health();
  EXPECT_EQ(h["mode"], "mock");
  EXPECT_EQ(h["models"], json::array({"sut"}));
  EXPECT_NO_THROW(client_.Probe());
}

TEST_F(HttpClientTest, WireSchemas) {
  int status = 0;
  json c = RawPost("/classify", R"({"model":"m","texts":["x","y"]})", &status);
  EXPECT_EQ(status, 200);
  EXPECT_EQ(c["labels"].size(), 2u);
  EXPECT_TRUE(c["latency_ms"].is_number());
  for (const auto& l : c["labels"]) {
    EXPECT_TRUE(ParseCorpusLabel(l.get<std::string>()).has_value());
  }

  json w = RawPost("/word-emotions", R"({"tokens":["laughed"]})", &status);
  EXPECT_EQ(status, 200);
  EXPECT_EQ(w, json::parse(R"({"tags":[{"pos":"verb","emotion":"joy"}]})"));

  json g = RawPost("/generate",
                   R"({"prompt":"Generate a sentence with a noun labeled as fear"})",
                   &status);
  EXPECT_EQ(status, 200);
  EXPECT_TRUE(g["text"].is_string());

  RawPost("/classify", R"({"texts":["x"]})", &status);
  EXPECT_EQ(status, 400);
  RawPost("/word-emotions", "not json", &status);
  EXPECT_EQ(status, 400);
  RawPost("/generate", R"({"prompt":""})", &status);
  EXPECT_EQ(status, 400);
  RawPost("/generate", R"({"prompt":"Write a poem"})", &status);
  EXPECT_EQ(status, 400);
}

TEST_F(HttpClientTest, ResponsesAreByteIdentical) {
  int status = 0;
  const std::string body = R"({"model":"m","texts":["a","b","c"]})";
  json first = RawPost("/classify", body, &status);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(RawPost("/classify", body, &status), first);
}

TEST_F(HttpClientTest, RetriesTransientFailures) {
  server_.FailNext(2, 503);
  std::size_t before = server_.request_count();
  EXPECT_EQ(client_.TagTokens(std::vector<std::string>{"laughed"}).size(), 1u);
  EXPECT_EQ(server_.request_count() - before, 3u);

  server_.FailNext(1, 429);
  EXPECT_NO_THROW(client_.Generate("a noun labeled as joy"));
}

TEST_F(HttpClientTest, GivesUpAfterRetryLimit) {
  server_.FailNext(3, 503);
  std::size_t before = server_.request_count();
  try {
    client_.Classify("m", std::vector<std::string>{"x"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRemoteUnavailable);
    EXPECT_TRUE(IsEndpointError(e.code()));
  }
  EXPECT_EQ(server_.request_count() - before, 3u);
}

TEST_F(HttpClientTest, ClientErrorsAreNotRetried) {
  std::size_t before = server_.request_count();
  EXPECT_THROW(client_.Generate(""), Error);
  EXPECT_EQ(server_.request_count() - before, 1u);
}

TEST(HttpClientStrictTest, UnknownModelIs404) {
  auto service = std::make_shared<const MockModelService>(
      MockOptions{0, {{"known", MockModelBehavior::kHash}}, true});
  MockHttpServer server(service);
  httplib::Client c("127.0.0.1", server.port());
  auto res = c.Post("/classify", R"({"model":"other","texts":["x"]})",
                    "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  HttpModelClient client(server.base_url(), FastOptions());
  EXPECT_THROW(client.Classify("other", std::vector<std::string>{"x"}), Error);
  EXPECT_NO_THROW(client.Classify("known", std::vector<std::string>{"x"}));
}

TEST(HttpClientUnreachableTest, ConnectionRefused) {
  int port = testing_util::UnusedPort();
  HttpModelClient client("http://127.0.0.1:" + std::to_string(port),
                         FastOptions(2));
  try {
    client.Probe();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRemoteUnavailable);
  }
}

TEST(HttpClientConfigTest, RejectsNonUrls) {
  EXPECT_THROW(HttpModelClient("localhost:8000", FastOptions()), Error);
}

// The API key travels only with generation requests, and a path prefix in
// the endpoint URL is honored.
TEST(HttpClientAuthTest, BearerTokenAndPathPrefix) {
  httplib::Server server;
  std::mutex mu;
  std::map<std::string, std::string> auth;
  auto record = [&](const httplib::Request& req, httplib::Response& res,
                    const std::string& body) {
    std::lock_guard lock(mu);
    auth[req.path] = req.get_header_value("Authorization");
    res.set_content(body, "application/json");
  };
  server.Post("/v1/generate", [&](const auto& req, auto& res) {
    record(req, res, R"({"text":"ok"})");
  });
  server.Post("/v1/classify", [&](const auto& req, auto& res) {
    record(req, res, R"({"labels":["joy"],"latency_ms":1})");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpClientOptions options = FastOptions();
  options.api_key = "secret";
  HttpModelClient client("http://127.0.0.1:" + std::to_string(port) + "/v1/",
                         options);
  EXPECT_EQ(client.Generate("p"), "ok");
  EXPECT_EQ(client.Classify("m", std::vector<std::string>{"x"}).front(),
            CorpusLabel::kJoy);
  server.stop();
  t.join();
  EXPECT_EQ(auth["/v1/generate"], "Bearer secret");
  EXPECT_EQ(auth["/v1/classify"], "");
}

TEST(HttpClientMalformedTest, WrongLabelCountOrLabel) {
  httplib::Server server;
  server.Post("/classify", [](const auto&, auto& res) {
    res.set_content(R"({"labels":["neutral"],"latency_ms":0})",
                    "application/json");
  });
  server.Post("/word-emotions", [](const auto&, auto& res) {
    res.set_content(R"({"tags":[]})", "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  HttpModelClient client("http://127.0.0.1:" + std::to_string(port),
                         FastOptions());
  EXPECT_THROW(client.Classify("m", std::vector<std::string>{"x"}), Error);
  Extractor ex(ExtractorConfig{}, std::shared_ptr<const WordEmotionService>(
                                      &client, [](const auto*) {}));
  EXPECT_THROW(ex.Extract("two words"), Error);
  server.stop();
  t.join();
}

TEST(HttpEndpointResolverTest, CachesClientsPerEndpoint) {
  HttpEndpointResolver resolver(FastOptions());
  auto a = resolver.Classifier("http://127.0.0.1:1");
  auto b = resolver.Generator("http://127.0.0.1:1");
  auto c = resolver.Classifier("http://127.0.0.1:2");
  EXPECT_EQ(static_cast<const void*>(dynamic_cast<const HttpModelClient*>(a.get())),
            static_cast<const void*>(dynamic_cast<const HttpModelClient*>(b.get())));
  EXPECT_NE(a.get(), c.get());
}

}  // namespace
}  // namespace emocov
