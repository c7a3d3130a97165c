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

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace vch::core {

// Runs task(0) .. task(count - 1) on at most max_parallel threads (1 means
// inline, in order). Exceptions are captured per task; slot i is null when
// task i succeeded.
std::vector<std::exception_ptr> run_bounded(
    std::size_t count, std::size_t max_parallel,
    const std::function<void(std::size_t)>& task);

}  // namespace vch::core
