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

#include "vch/transport/live.h"

#include <cstdlib>
#include <thread>

#include "json.hpp"
#include "vch/core/error.h"
#include "vch/transport/retry.h"

namespace vch::transport {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> real_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

std::string truncate(std::string_view s, std::size_t n) {
  if (s.size() <= n) return std::string(s);
  return std::string(s.substr(0, n)) + "...";
}

}  // namespace

std::string_view wire_role(core::Role role) {
  switch (role) {
    case core::Role::kOperator:
      return "user";
    case core::Role::kModel:
      return "assistant";
    case core::Role::kSystem:
      return "system";
  }
  return "user";
}

std::string build_request_body(const ChatRequest& request) {
  Json body;
  body["model"] = request.model.endpoint_id.empty() ? request.model.name
                                                    : request.model.endpoint_id;
  Json messages = Json::array();
  for (const auto& m : request.messages) {
    Json msg;
    msg["role"] = std::string(wire_role(m.role));
    msg["content"] = m.text;
    messages.push_back(std::move(msg));
  }
  body["messages"] = std::move(messages);
  body["temperature"] = request.model.temperature;
  body["top_p"] = request.model.top_p;
  if (request.max_output_tokens) body["max_tokens"] = *request.max_output_tokens;
  for (const auto& [key, raw] : request.model.extra_params) {
    if (body.contains(key)) continue;
    // Values that parse as JSON keep their type ("0.5" -> 0.5).
    Json value = Json::parse(raw, nullptr, /*allow_exceptions=*/false);
    body[key] = value.is_discarded() ? Json(raw) : std::move(value);
  }
  return body.dump();
}

std::string extract_reply_text(std::string_view body) {
  const Json j = Json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw TransportError("reply is not a JSON object: " + truncate(body, 200));
  }
  if (const auto choices = j.find("choices");
      choices != j.end() && choices->is_array() && !choices->empty()) {
    const Json& first = (*choices)[0];
    if (first.contains("message") && first["message"].contains("content") &&
        first["message"]["content"].is_string()) {
      return first["message"]["content"].get<std::string>();
    }
  }
  if (const auto content = j.find("content");
      content != j.end() && content->is_array()) {
    std::string text;
    bool found = false;
    for (const auto& block : *content) {
      if (block.is_object() && block.contains("text") &&
          block["text"].is_string()) {
        text += block["text"].get<std::string>();
        found = true;
      }
    }
    if (found) return text;
  }
  throw TransportError("reply carries no assistant text: " +
                       truncate(body, 200));
}

LiveTransport::LiveTransport(TransportConfig config, LiveOptions options)
    : config_(std::move(config)) {
  config_.validate();
  if (config_.endpoint_url.empty()) {
    throw ConfigError("live transport needs an endpoint URL");
  }
  const EnvLookup env = options.env ? options.env : EnvLookup(real_env);
  const auto key = env(config_.auth_env);
  if (!key || key->empty()) {
    throw ConfigError("environment variable " + config_.auth_env +
                      " is not set; the live transport needs an API key");
  }
  api_key_ = *key;
  http_ = options.http ? options.http : make_http_poster();
  sleep_ = options.sleep ? options.sleep
                         : Sleeper([](std::chrono::milliseconds d) {
                             std::this_thread::sleep_for(d);
                           });
  limiter_ = options.limiter ? options.limiter
                             : std::make_shared<TokenBucket>(
                                   config_.rate_limit_per_minute);
}

std::string LiveTransport::send(const ChatRequest& request) {
  request.validate();
  const std::string body = build_request_body(request);
  HttpHeaders headers = config_.headers;
  headers["Authorization"] = "Bearer " + api_key_;

  int attempts = 0;
  int retries = 0;
  for (;;) {
    limiter_->acquire();
    const HttpResponse res =
        http_->post(config_.endpoint_url, headers, body, config_.request_timeout);
    ++attempts;
    if (res.status >= 200 && res.status < 300) {
      return extract_reply_text(res.body);
    }
    const std::string detail =
        res.status == 0 ? "no response (" + res.error + ")"
                        : "HTTP " + std::to_string(res.status) + ": " +
                              truncate(res.body, 200);
    if (!is_retryable_status(res.status)) {
      throw TransportError("non-retryable failure: " + detail, res.status,
                           attempts);
    }
    if (retries >= config_.max_retries) {
      throw TransportError("retries exhausted after " +
                               std::to_string(attempts) +
                               " attempts; last: " + detail,
                           res.status, attempts);
    }
    ++retries;
    sleep_(backoff_delay(config_.retry_backoff_base, retries));
  }
}

}  // namespace vch::transport
