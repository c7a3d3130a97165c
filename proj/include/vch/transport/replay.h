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

#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "vch/core/transcript.h"
#include "vch/transport/chat.h"

namespace vch::transport {

// Serves a recorded transcript's model turns in order, ignoring request
// content. Sequential by contract.
class ReplayTransport : public ChatTransport {
 public:
  // Throws ValidationError if the transcript has no model turns.
  explicit ReplayTransport(const core::Transcript& transcript);

  // Throws TransportError "replay exhausted" once every turn is served.
  std::string send(const ChatRequest& request) override;

  std::size_t remaining() const { return replies_.size() - next_; }
  const std::string& session_id() const { return session_id_; }

 private:
  std::string session_id_;
  std::vector<std::string> replies_;
  std::size_t next_ = 0;
  std::atomic<bool> busy_{false};
};

std::unique_ptr<ChatTransport> make_replay(const core::Transcript& transcript);

}  // namespace vch::transport
