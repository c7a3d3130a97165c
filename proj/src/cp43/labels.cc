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

#include "vch/cp43/labels.h"

#include <string>

#include "vch/core/error.h"

namespace vch::cp43 {

std::string_view to_string(Label label) {
  static constexpr std::string_view kNames[] = {"X1", "X2", "X3",
                                                "X4", "X5", "X6"};
  return kNames[index(label)];
}

std::optional<Label> parse_label(std::string_view text) {
  if (text.size() != 2 || text[0] != 'X' || text[1] < '1' || text[1] > '6') {
    return std::nullopt;
  }
  return static_cast<Label>(text[1] - '1');
}

void validate(const Cp43Run& run) {
  std::array<bool, kLabelCount> seen{};
  for (Label l : run.rank) {
    if (index(l) >= kLabelCount) throw ValidationError("rank label out of range");
    if (seen[index(l)]) {
      throw ValidationError("duplicate label " + std::string(to_string(l)) +
                            " in rank");
    }
    seen[index(l)] = true;
  }
  for (Label l : kAllLabels) {
    if (run.at(l) < 0) {
      throw ValidationError("negative allocation for " +
                            std::string(to_string(l)));
    }
  }
}

}  // namespace vch::cp43
