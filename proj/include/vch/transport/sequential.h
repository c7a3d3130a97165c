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
#include <string>

#include "vch/core/error.h"

namespace vch::transport {

// Marks a sequential-only section. Entering it while another thread is
// inside throws ConcurrentUseError instead of corrupting state.
class SequentialSection {
 public:
  SequentialSection(std::atomic<bool>& busy, const std::string& owner)
      : busy_(busy) {
    if (busy_.exchange(true, std::memory_order_acq_rel)) {
      throw ConcurrentUseError(owner +
                               " is sequential but was used concurrently");
    }
  }
  ~SequentialSection() { busy_.store(false, std::memory_order_release); }

  SequentialSection(const SequentialSection&) = delete;
  SequentialSection& operator=(const SequentialSection&) = delete;

 private:
  std::atomic<bool>& busy_;
};

}  // namespace vch::transport
