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
#include <mutex>

namespace vch::transport {

// Thread-safe token bucket. Tokens refill continuously at
// rate_per_minute / 60 per second up to capacity; the bucket starts full.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;
  using NowFn = std::function<Clock::time_point()>;
  using SleepFn = std::function<void(std::chrono::nanoseconds)>;

  explicit TokenBucket(double rate_per_minute, double capacity = 1.0,
                       NowFn now = nullptr, SleepFn sleep = nullptr);

  bool try_acquire();
  // Blocks until a token is available.
  void acquire();

  // Time until the next token is available (zero when one is).
  std::chrono::nanoseconds wait_time();

  double rate_per_minute() const { return rate_per_minute_; }

 private:
  void refill_locked(Clock::time_point now);

  const double rate_per_minute_;
  const double capacity_;
  NowFn now_;
  SleepFn sleep_;

  std::mutex mu_;
  double tokens_;
  Clock::time_point last_;
};

}  // namespace vch::transport
