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

#include "vch/transport/retry.h"

#include <algorithm>

namespace vch::transport {

bool is_retryable_status(int status) {
  return status == 0 || status == 408 || status == 429 ||
         (status >= 500 && status <= 599);
}

std::chrono::milliseconds backoff_delay(std::chrono::milliseconds base,
                                        int retry) {
  if (retry < 1 || base.count() <= 0) return std::chrono::milliseconds{0};
  auto delay = base;
  for (int i = 1; i < retry && delay < kMaxBackoff; ++i) delay *= 2;
  return std::min(delay, kMaxBackoff);
}

std::vector<std::chrono::milliseconds> backoff_schedule(
    const TransportConfig& config) {
  std::vector<std::chrono::milliseconds> out;
  for (int r = 1; r <= config.max_retries; ++r) {
    out.push_back(backoff_delay(config.retry_backoff_base, r));
  }
  return out;
}

}  // namespace vch::transport
