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

#include "vch/transport/replay.h"

#include "vch/core/error.h"
#include "vch/transport/sequential.h"

namespace vch::transport {

ReplayTransport::ReplayTransport(const core::Transcript& transcript)
    : session_id_(transcript.session_id) {
  for (const core::Turn* turn : transcript.model_turns()) {
    replies_.push_back(turn->text);
  }
  if (replies_.empty()) {
    throw ValidationError("cannot replay session '" + session_id_ +
                          "': it has no model turns");
  }
}

std::string ReplayTransport::send(const ChatRequest& request) {
  SequentialSection section(busy_, "replay of '" + session_id_ + "'");
  request.validate();
  if (next_ >= replies_.size()) {
    throw TransportError("replay exhausted for session '" + session_id_ + "'");
  }
  return replies_[next_++];
}

std::unique_ptr<ChatTransport> make_replay(const core::Transcript& transcript) {
  return std::make_unique<ReplayTransport>(transcript);
}

}  // namespace vch::transport
