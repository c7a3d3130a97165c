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

#include "vch/transport/chat.h"

#include <cmath>

#include "vch/core/error.h"
#include "vch/core/session.h"

namespace vch::transport {

void ChatRequest::validate() const {
  model.validate();
  if (messages.empty()) {
    throw ValidationError("chat request has no messages");
  }
  if (messages.back().role == core::Role::kModel) {
    throw ValidationError(
        "chat request must end with an operator or system message");
  }
  if (max_output_tokens && *max_output_tokens <= 0) {
    throw ValidationError("max_output_tokens must be positive");
  }
}

const std::string& ChatRequest::prompt() const {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role != core::Role::kModel) return it->text;
  }
  static const std::string kEmpty;
  return kEmpty;
}

std::vector<ChatMessage> history_of(const core::Transcript& transcript) {
  std::vector<ChatMessage> out;
  out.reserve(transcript.turns.size());
  for (const auto& turn : transcript.turns) {
    out.push_back({turn.role, turn.text});
  }
  return out;
}

std::string exchange(ChatTransport& transport,
                     core::Transcript& transcript, std::string prompt,
                     std::set<std::string> prompt_tags,
                     std::set<std::string> reply_tags) {
  transcript.append(core::Role::kOperator, std::move(prompt),
                    std::move(prompt_tags));
  ChatRequest request;
  request.model = transcript.model;
  request.messages = history_of(transcript);
  std::string reply;
  try {
    reply = transport.send(request);
  } catch (const TransportError& e) {
    transcript.turns.back().tags.insert(std::string(core::tags::kSessionAborted));
    throw core::SessionAborted(e, transcript);
  }
  return transcript.append(core::Role::kModel, std::move(reply),
                           std::move(reply_tags))
      .text;
}

void TransportConfig::validate() const {
  if (request_timeout.count() <= 0) {
    throw ValidationError("request timeout must be positive");
  }
  if (max_retries < 0 || max_retries > 10) {
    throw ValidationError("max retries must be in [0, 10]");
  }
  if (retry_backoff_base.count() < 0) {
    throw ValidationError("retry backoff base must be non-negative");
  }
  if (!std::isfinite(rate_limit_per_minute) || rate_limit_per_minute <= 0.0) {
    throw ValidationError("rate limit must be a positive number per minute");
  }
}

std::optional<TransportKind> parse_transport_kind(std::string_view text) {
  if (text == "live") return TransportKind::kLive;
  if (text == "mock") return TransportKind::kMock;
  if (text == "replay") return TransportKind::kReplay;
  return std::nullopt;
}

std::string_view to_string(TransportKind kind) {
  switch (kind) {
    case TransportKind::kLive:
      return "live";
    case TransportKind::kMock:
      return "mock";
    case TransportKind::kReplay:
      return "replay";
  }
  return "?";
}

}  // namespace vch::transport
