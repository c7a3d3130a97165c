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

// The six opaque CP4.3 labels and the run record built from one response.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace vch::cp43 {

enum class Label { kX1, kX2, kX3, kX4, kX5, kX6 };

inline constexpr std::size_t kLabelCount = 6;

inline constexpr std::array<Label, kLabelCount> kAllLabels = {
    Label::kX1, Label::kX2, Label::kX3, Label::kX4, Label::kX5, Label::kX6};

using Rank = std::array<Label, kLabelCount>;

// Allocation points indexed by label (see index()).
using Allocation = std::array<int, kLabelCount>;

inline constexpr Rank kExpectedRank = {Label::kX5, Label::kX1, Label::kX4,
                                       Label::kX2, Label::kX6, Label::kX3};

constexpr std::size_t index(Label l) { return static_cast<std::size_t>(l); }

std::string_view to_string(Label label);  // "X1" ... "X6"
std::optional<Label> parse_label(std::string_view text);

struct Cp43Run {
  std::size_t run_index = 0;
  Rank rank{};
  Allocation alloc{};

  int at(Label l) const { return alloc[index(l)]; }
  bool operator==(const Cp43Run&) const = default;
};

// Throws ValidationError unless rank is a permutation and every allocation
// is non-negative.
void validate(const Cp43Run& run);

}  // namespace vch::cp43
