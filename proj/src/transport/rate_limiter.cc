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

#include "vch/transport/rate_limiter.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "vch/core/error.h"

namespace vch::transport {

TokenBucket::TokenBucket(double rate_per_minute, double capacity, NowFn now,
                         SleepFn sleep)
    : rate_per_minute_(rate_per_minute),
      capacity_(capacity),
      now_(now ? std::move(now) : NowFn([] { return Clock::now(); })),
      sleep_(sleep ? std::move(sleep) : SleepFn([](std::chrono::nanoseconds d) {
        std::this_thread::sleep_for(d);
      })),
      tokens_(capacity) {
  if (!std::isfinite(rate_per_minute) || rate_per_minute <= 0.0) {
    throw ValidationError("token bucket rate must be positive");
  }
  if (!std::isfinite(capacity) || capacity < 1.0) {
    throw ValidationError("token bucket capacity must be at least 1");
  }
  last_ = now_();
}

void TokenBucket::refill_locked(Clock::time_point now) {
  if (now <= last_) return;
  const double elapsed_s =
      std::chrono::duration<double>(now - last_).count();
  tokens_ = std::min(capacity_, tokens_ + elapsed_s * rate_per_minute_ / 60.0);
  last_ = now;
}

bool TokenBucket::try_acquire() {
  std::lock_guard lock(mu_);
  refill_locked(now_());
  if (tokens_ >= 1.0) {
    tokens_ -= 1.0;
    return true;
  }
  return false;
}

std::chrono::nanoseconds TokenBucket::wait_time() {
  std::lock_guard lock(mu_);
  refill_locked(now_());
  if (tokens_ >= 1.0) return std::chrono::nanoseconds{0};
  const double seconds = (1.0 - tokens_) * 60.0 / rate_per_minute_;
  return std::chrono::nanoseconds{
      static_cast<std::int64_t>(std::ceil(seconds * 1e9))};
}

void TokenBucket::acquire() {
  while (!try_acquire()) sleep_(wait_time());
}

}  // namespace vch::transport
