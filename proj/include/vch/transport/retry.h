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
#include <vector>

#include "vch/transport/chat.h"

namespace vch::transport {

inline constexpr std::chrono::milliseconds kMaxBackoff{60'000};

// 0 stands for "no response" (connection failure or timeout).
bool is_retryable_status(int status);

// Delay before retry number `retry` (1-based): base * 2^(retry-1), capped at
// kMaxBackoff.
std::chrono::milliseconds backoff_delay(std::chrono::milliseconds base,
                                        int retry);

// All delays a request may sleep through under config, in order.
std::vector<std::chrono::milliseconds> backoff_schedule(
    const TransportConfig& config);

}  // namespace vch::transport
