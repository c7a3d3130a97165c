// Copyright 2026 The vc-harness Authors
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


#include <chrono>
#include <deque>
#include <mutex>
#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"
#include "json.hpp"
#include "vch/core/error.h"
#include "vch/core/session.h"
#include "vch/transport/live.h"
#include "vch/transport/rate_limiter.h"
#include "vch/transport/replay.h"
#include "vch/transport/retry.h"
#include "vch/transport/scripted.h"
#include "vch/transport/sequential.h"
#include "vch/vc/engine.h"

namespace vch::transport {
namespace {

using std::chrono::milliseconds;

ChatRequest request(std::string prompt) {
  ChatRequest r;
  r.model.name = "Model A";
  r.messages.push_back({core::Role::kOperator, std::move(prompt)});
  return r;
}

std::string ok_body(const std::string& text) {
  return nlohmann::json{{"choices", {{{"message", {{"content", text}}}}}}}.dump();
}

class FakePoster : public HttpPoster {
 public:
  explicit FakePoster(std::deque<HttpResponse> replies) : replies_(std::move(replies)) {}
  HttpResponse post(const std::string& url, const HttpHeaders& headers,
                    const std::string& body, milliseconds) override {
    urls.push_back(url);
    last_headers = headers;
    bodies.push_back(body);
    if (replies_.empty()) return {0, "", "fake exhausted"};
    HttpResponse r = replies_.front();
    replies_.pop_front();
    return r;
  }
  std::vector<std::string> urls;
  std::vector<std::string> bodies;
  HttpHeaders last_headers;

 private:
  std::deque<HttpResponse> replies_;
};

struct LiveFixture {
  std::shared_ptr<FakePoster> http;
  std::vector<milliseconds> sleeps;
  LiveOptions options() {
    LiveOptions o;
    o.http = http;
    o.env = [](const std::string& name) -> std::optional<std::string> {
      if (name == "VC_HARNESS_API_KEY") return "secret-key";
      return std::nullopt;
    };
    o.sleep = [this](milliseconds d) { sleeps.push_back(d); };
    o.limiter = std::make_shared<TokenBucket>(1e9, 1e9);
    return o;
  }
};

TransportConfig config(int retries = 3) {
  TransportConfig c;
  c.endpoint_url = "http://example.invalid/v1/chat";
  c.max_retries = retries;
  c.retry_backoff_base = milliseconds(100);
  return c;
}

TEST(Retry, RetryableStatuses) {
  for (int s : {0, 408, 429, 500, 502, 503, 599}) EXPECT_TRUE(is_retryable_status(s)) << s;
  for (int s : {200, 400, 401, 403, 404, 422, 600}) EXPECT_FALSE(is_retryable_status(s)) << s;
}

TEST(Retry, BackoffDoublesAndCaps) {
  EXPECT_EQ(backoff_delay(milliseconds(500), 1), milliseconds(500));
  EXPECT_EQ(backoff_delay(milliseconds(500), 2), milliseconds(1000));
  EXPECT_EQ(backoff_delay(milliseconds(500), 3), milliseconds(2000));
  EXPECT_EQ(backoff_delay(milliseconds(500), 40), kMaxBackoff);
  EXPECT_EQ(backoff_delay(milliseconds(0), 3), milliseconds(0));
  TransportConfig c;
  c.max_retries = 10;
  const auto s = backoff_schedule(c);
  ASSERT_EQ(s.size(), 10u);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1], s[i]);
}

TEST(Live, RetriesUntilSuccessWithBackoff) {
  LiveFixture f;
  f.http = std::make_shared<FakePoster>(std::deque<HttpResponse>{
      {429, "slow down", ""}, {0, "", "timeout"}, {503, "busy", ""}, {200, ok_body("fine"), ""}});
  LiveTransport t(config(3), f.options());
  EXPECT_EQ(t.send(request("hi")), "fine");
  EXPECT_EQ(f.http->bodies.size(), 4u);
  EXPECT_EQ(f.sleeps, (std::vector<milliseconds>{milliseconds(100), milliseconds(200), milliseconds(400)}));
}

TEST(Live, StopsAfterMaxRetries) {
  LiveFixture f;
  f.http = std::make_shared<FakePoster>(std::deque<HttpResponse>(6, HttpResponse{429, "no", ""}));
  LiveTransport t(config(2), f.options());
  try {
    t.send(request("hi"));
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.status(), 429);
    EXPECT_EQ(e.attempts(), 3);
  }
  EXPECT_EQ(f.sleeps.size(), 2u);
}

TEST(Live, NonRetryableFailsImmediately) {
  LiveFixture f;
  f.http = std::make_shared<FakePoster>(std::deque<HttpResponse>{{401, "bad key", ""}});
  LiveTransport t(config(3), f.options());
  try {
    t.send(request("hi"));
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.status(), 401);
    EXPECT_EQ(e.attempts(), 1);
  }
  EXPECT_TRUE(f.sleeps.empty());
}

TEST(Live, KeyComesFromEnvironmentOnly) {
  LiveFixture f;
  f.http = std::make_shared<FakePoster>(std::deque<HttpResponse>{{200, ok_body("x"), ""}});
  TransportConfig c = config();
  c.headers["X-Org"] = "lab";
  LiveTransport t(c, f.options());
  t.send(request("hi"));
  EXPECT_EQ(f.http->last_headers.at("Authorization"), "Bearer secret-key");
  EXPECT_EQ(f.http->last_headers.at("X-Org"), "lab");

  LiveOptions no_key = f.options();
  no_key.env = [](const std::string&) { return std::optional<std::string>(); };
  EXPECT_THROW(LiveTransport(config(), no_key), ConfigError);
  TransportConfig no_url = config();
  no_url.endpoint_url.clear();
  EXPECT_THROW(LiveTransport(no_url, f.options()), ConfigError);
}

TEST(Live, RequestBodyShape) {
  ChatRequest r = request("hello");
  r.messages.push_back({core::Role::kModel, "hi"});
  r.messages.push_back({core::Role::kOperator, "again"});
  r.model.endpoint_id = "wire-id";
  r.model.extra_params["thinking"] = "{\"type\":\"enabled\"}";
  r.model.extra_params["label"] = "plain";
  const auto j = nlohmann::json::parse(build_request_body(r));
  EXPECT_EQ(j["model"], "wire-id");
  EXPECT_EQ(j["messages"].size(), 3u);
  EXPECT_EQ(j["messages"][1]["role"], "assistant");
  EXPECT_EQ(j["temperature"], 1.0);
  EXPECT_EQ(j["top_p"], 1.0);
  EXPECT_FALSE(j.contains("max_tokens"));
  EXPECT_EQ(j["thinking"]["type"], "enabled");
  EXPECT_EQ(j["label"], "plain");
  r.max_output_tokens = 256;
  EXPECT_EQ(nlohmann::json::parse(build_request_body(r))["max_tokens"], 256);
}

TEST(Live, ReplyShapes) {
  EXPECT_EQ(extract_reply_text(ok_body("a")), "a");
  EXPECT_EQ(extract_reply_text(R"({"content":[{"type":"text","text":"b"},{"type":"text","text":"c"}]})"), "bc");
  EXPECT_THROW(extract_reply_text("not json"), TransportError);
  EXPECT_THROW(extract_reply_text(R"({"choices":[]})"), TransportError);
}

TEST(Live, LocalServerReturning429Twice) {
  httplib::Server server;
  std::mutex mu;
  int hits = 0;
  std::string auth;
  server.Post("/v1/chat", [&](const httplib::Request& req, httplib::Response& res) {
    std::lock_guard<std::mutex> lock(mu);
    ++hits;
    auth = req.get_header_value("Authorization");
    if (hits <= 2) {
      res.status = 429;
      res.set_content("rate limited", "text/plain");
    } else {
      res.set_content(ok_body("served"), "application/json");
    }
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  LiveFixture f;
  LiveOptions o = f.options();
  o.http = nullptr;
  TransportConfig c = config(3);
  c.endpoint_url = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat";
  c.request_timeout = milliseconds(5000);
  LiveTransport t(c, o);
  EXPECT_EQ(t.send(request("hi")), "served");
  server.stop();
  th.join();
  EXPECT_EQ(hits, 3);
  EXPECT_EQ(auth, "Bearer secret-key");
  EXPECT_EQ(f.sleeps.size(), 2u);
}

TEST(Live, ConnectionRefusedIsRetriedThenFails) {
  LiveFixture f;
  LiveOptions o = f.options();
  o.http = nullptr;
  TransportConfig c = config(1);
  // Port 9 on loopback is normally closed.
  c.endpoint_url = "http://127.0.0.1:9/v1/chat";
  c.request_timeout = milliseconds(500);
  LiveTransport t(c, o);
  try {
    t.send(request("hi"));
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.status(), 0);
    EXPECT_EQ(e.attempts(), 2);
  }
}

TEST(Config, Validation) {
  TransportConfig c;
  EXPECT_NO_THROW(c.validate());
  c.max_retries = 11;
  EXPECT_THROW(c.validate(), ValidationError);
  c.max_retries = 3;
  c.rate_limit_per_minute = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c.rate_limit_per_minute = 30;
  c.request_timeout = milliseconds(0);
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(TokenBucket, RefillsAtConfiguredRate) {
  auto now = TokenBucket::Clock::time_point{};
  std::vector<std::chrono::nanoseconds> slept;
  TokenBucket b(
      60.0, 1.0, [&] { return now; },
      [&](std::chrono::nanoseconds d) {
        slept.push_back(d);
        now += d;
      });
  EXPECT_TRUE(b.try_acquire());
  EXPECT_FALSE(b.try_acquire());
  EXPECT_NEAR(std::chrono::duration<double>(b.wait_time()).count(), 1.0, 1e-6);
  now += std::chrono::milliseconds(500);
  EXPECT_FALSE(b.try_acquire());
  now += std::chrono::milliseconds(500);
  EXPECT_TRUE(b.try_acquire());
  b.acquire();
  ASSERT_FALSE(slept.empty());
  // Idle time never banks more than the capacity.
  now += std::chrono::hours(1);
  EXPECT_TRUE(b.try_acquire());
  EXPECT_FALSE(b.try_acquire());
}

TEST(Scripted, RotatesRepliesPerRule) {
  Script s = parse_script(R"({"rules":[{"contains":"A","replies":["a1","a2"]},{"contains":"B","reply":"b"}]})");
  ScriptedTransport t(s);
  EXPECT_EQ(t.send(request("xAx")), "a1");
  EXPECT_EQ(t.send(request("B")), "b");
  EXPECT_EQ(t.send(request("A")), "a2");
  EXPECT_EQ(t.send(request("A")), "a1");
  EXPECT_THROW(t.send(request("none")), TransportError);
  EXPECT_EQ(t.calls(), 5u);
}

TEST(Scripted, SeededDrawsAreReproducible) {
  Script s = parse_script(R"({"rules":[{"contains":"","replies":["1","2","3","4","5"]}]})");
  ScriptedTransport a(s, 42), b(s, 42);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.send(request("p")), b.send(request("p")));
}

TEST(Scripted, FallbackAndBadScripts) {
  ScriptedTransport t(parse_script(R"({"rules":[],"fallback":"default"})"));
  EXPECT_EQ(t.send(request("anything")), "default");
  EXPECT_THROW(parse_script("[]"), ConfigError);
  EXPECT_THROW(parse_script(R"({"rules":[{"contains":"x"}]})"), ConfigError);
  EXPECT_THROW(parse_script(R"({"rules":[{"contains":"x","replies":[1]}]})"), ConfigError);
}

TEST(Sequential, SecondEntrantThrows) {
  std::atomic<bool> busy{false};
  SequentialSection first(busy, "thing");
  EXPECT_THROW(SequentialSection(busy, "thing"), ConcurrentUseError);
}

TEST(Sequential, ScriptedTransportDetectsConcurrentUse) {
  // Large requests keep each send() busy copying, so almost any preemption
  // lands inside it and the other thread walks in, even on one core.
  ScriptedTransport t(parse_script(R"({"rules":[],"fallback":"x"})"));
  std::atomic<bool> saw{false};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    ChatRequest r = request(std::string(200000, 'p'));
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(10);
    while (!stop && std::chrono::steady_clock::now() < deadline) {
      try {
        t.send(r);
      } catch (const ConcurrentUseError&) {
        saw = true;
        stop = true;
      }
    }
  };
  std::thread a(worker), b(worker);
  a.join();
  b.join();
  EXPECT_TRUE(saw.load());
}

core::Transcript recorded() {
  core::Transcript t;
  t.session_id = "r1";
  t.protocol = core::Protocol::kVc;
  t.model.name = "Model A";
  t.append(core::Role::kOperator, "p1");
  t.append(core::Role::kModel, "first");
  t.append(core::Role::kOperator, "p2");
  t.append(core::Role::kModel, "second");
  t.append(core::Role::kOperator, "p3");
  t.append(core::Role::kModel, "0.10/0.20/0.30|EN");
  return t;
}

TEST(Replay, ServesInOrderThenExhausts) {
  ReplayTransport r(recorded());
  EXPECT_EQ(r.remaining(), 3u);
  EXPECT_EQ(r.send(request("ignored")), "first");
  EXPECT_EQ(r.send(request("ignored")), "second");
  EXPECT_EQ(r.send(request("ignored")), "0.10/0.20/0.30|EN");
  EXPECT_THROW(r.send(request("x")), TransportError);
  core::Transcript empty;
  empty.session_id = "e";
  empty.model.name = "m";
  EXPECT_THROW(ReplayTransport{empty}, ValidationError);
}

TEST(Replay, EngineRederivesIdenticalModelTexts) {
  const core::Transcript t = recorded();
  auto replay = make_replay(t);
  const auto again = vc::conduct_vc(*replay, vc::VcPromptSet::from_recorded(t), t.model,
                                    {t.session_id, t.run_id});
  std::vector<std::string> want, got;
  for (const auto* turn : t.model_turns()) want.push_back(turn->text);
  for (const auto* turn : again.model_turns()) got.push_back(turn->text);
  EXPECT_EQ(got, want);
  EXPECT_EQ(again.turns.size(), t.turns.size());
}

TEST(Exchange, AbortCarriesPartialTranscript) {
  ScriptedTransport t(parse_script(R"({"rules":[{"contains":"one","reply":"ok"}]})"));
  core::Transcript tr;
  tr.session_id = "s";
  tr.model.name = "m";
  EXPECT_EQ(exchange(t, tr, "one"), "ok");
  try {
    exchange(t, tr, "two");
    FAIL() << "expected SessionAborted";
  } catch (const core::SessionAborted& e) {
    ASSERT_EQ(e.partial().turns.size(), 3u);
    EXPECT_TRUE(e.partial().turns.back().has_tag(core::tags::kSessionAborted));
  }
}

}  // namespace
}  // namespace vch::transport
