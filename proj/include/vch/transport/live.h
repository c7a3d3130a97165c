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

#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "vch/transport/chat.h"
#include "vch/transport/http_client.h"
#include "vch/transport/rate_limiter.h"

namespace vch::transport {

using EnvLookup =
    std::function<std::optional<std::string>(const std::string& name)>;
using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Seams for tests; every null member falls back to the real thing.
struct LiveOptions {
  std::shared_ptr<HttpPoster> http;
  EnvLookup env;
  Sleeper sleep;
  std::shared_ptr<TokenBucket> limiter;
};

// Generic chat-completions client:
//
//   POST endpoint_url
//   Authorization: Bearer <key from $auth_env>
//   {"model":...,"messages":[{"role":"user","content":...}],
//    "temperature":1.0,"top_p":1.0,"max_tokens":...}
//
// HTTP 429, 408, 5xx and missing responses are retried with exponential
// backoff up to max_retries times; any other non-2xx fails immediately.
// Safe to share between threads; all callers draw from one rate limiter.
class LiveTransport : public ChatTransport {
 public:
  // Throws ConfigError when the endpoint is empty or the key is not set,
  // ValidationError when config is invalid.
  explicit LiveTransport(TransportConfig config, LiveOptions options = {});

  std::string send(const ChatRequest& request) override;

  const TransportConfig& config() const { return config_; }

 private:
  TransportConfig config_;
  std::string api_key_;
  std::shared_ptr<HttpPoster> http_;
  Sleeper sleep_;
  std::shared_ptr<TokenBucket> limiter_;
};

std::string build_request_body(const ChatRequest& request);

// Accepts {"choices":[{"message":{"content":"..."}}]} and, as a fallback,
// {"content":[{"type":"text","text":"..."}]}. Throws TransportError when
// neither shape yields text.
std::string extract_reply_text(std::string_view body);

std::string_view wire_role(core::Role role);

}  // namespace vch::transport
