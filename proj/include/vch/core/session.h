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

#include <string>
#include <utility>

#include "vch/core/error.h"
#include "vch/core/transcript.h"

namespace vch::core {

// Identity given to a new session by whoever launches it.
struct SessionIds {
  std::string session_id;
  std::string run_id;
};

// A transport failure in the middle of a protocol session. Carries
// everything recorded up to the failure so it can still be persisted.
class SessionAborted : public TransportError {
 public:
  SessionAborted(const TransportError& cause, Transcript partial)
      : TransportError(std::string("session '") + partial.session_id +
                           "' aborted: " + cause.what(),
                       cause.status(), cause.attempts()),
        partial_(std::move(partial)) {}

  const Transcript& partial() const { return partial_; }

 private:
  Transcript partial_;
};

}  // namespace vch::core
