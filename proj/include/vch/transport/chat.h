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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/transcript.h"

namespace vch::transport {

struct ChatMessage {
  core::Role role = core::Role::kOperator;
  std::string text;

  bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
  core::ModelTarget model;
  std::vector<ChatMessage> messages;
  // Left unset by default so the platform default applies.
  std::optional<int> max_output_tokens;

  // Throws ValidationError: no messages, last message from the model, or a
  // non-positive max_output_tokens.
  void validate() const;

  // Text of the last operator/system message.
  const std::string& prompt() const;
};

// The message list a session has accumulated so far, in wire order.
std::vector<ChatMessage> history_of(const core::Transcript& transcript);

// A chat backend. send() returns exactly one assistant reply.
class ChatTransport {
 public:
  virtual ~ChatTransport() = default;
  virtual std::string send(const ChatRequest& request) = 0;
};

inline constexpr std::string_view kDefaultAuthEnv = "VC_HARNESS_API_KEY";

struct TransportConfig {
  std::string endpoint_url;
  // Name of the environment variable holding the API key.
  std::string auth_env = std::string(kDefaultAuthEnv);
  std::chrono::milliseconds request_timeout{60'000};
  int max_retries = 3;
  std::chrono::milliseconds retry_backoff_base{500};
  // Client-side token bucket rate.
  double rate_limit_per_minute = 30.0;
  // Extra request headers (never credentials).
  std::map<std::string, std::string> headers;

  // Throws ValidationError: non-positive timeout, retries outside [0, 10],
  // negative backoff, or non-positive rate.
  void validate() const;
};

// Appends `prompt` as an operator turn, sends the accumulated history and
// appends the reply as a model turn. A TransportError becomes
// core::SessionAborted carrying the transcript so far (last turn tagged
// "session-aborted"). A ConcurrentUseError passes through unchanged.
std::string exchange(ChatTransport& transport,
                     core::Transcript& transcript, std::string prompt,
                     std::set<std::string> prompt_tags = {},
                     std::set<std::string> reply_tags = {});

enum class TransportKind { kLive, kMock, kReplay };

std::optional<TransportKind> parse_transport_kind(std::string_view text);
std::string_view to_string(TransportKind kind);

}  // namespace vch::transport
