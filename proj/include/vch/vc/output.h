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

// The constrained calibration line:
//
//   value '/' value '/' value '|' mode
//   value := '0.' digit digit | '1.00'
//   mode  := 'RU' | 'EN' | 'MIX'
//
// e.g. "0.35/0.94/0.98|EN". The line may be embedded in prose; the reply
// must contain it exactly once.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/fixed2.h"
#include "vch/core/transcript.h"

namespace vch::vc {

struct VcTrajectory {
  core::Fixed2 t0;
  core::Fixed2 t1;
  core::Fixed2 t2;
  core::LanguageMode mode = core::LanguageMode::kEn;
  // t0 < t1 < t2, strict.
  bool monotone = false;
  // Some value was the literal 1.00 (accepted beyond the 0.xx form).
  bool uses_one = false;
  // Where the line was found in the reply.
  std::size_t offset = 0;
  std::size_t length = 0;

  bool operator==(const VcTrajectory&) const = default;
};

bool strictly_increasing(core::Fixed2 a, core::Fixed2 b, core::Fixed2 c);

// Byte offsets of every position where a full constrained line starts.
std::vector<std::size_t> find_vc_lines(std::string_view text);

// Throws ParseError when no line is present and AmbiguousOutputError when
// more than one is.
VcTrajectory parse_vc_output(std::string_view text);

// "0.35/0.94/0.98|EN"
std::string format_vc_output(const VcTrajectory& trajectory);

// Matches a single value token (same value grammar) that is not part of a
// longer number. Used by the single-pass ablation. Throws ParseError /
// AmbiguousOutputError like parse_vc_output.
core::Fixed2 parse_single_value(std::string_view text);

// Value tokens found by parse_single_value's scanner.
std::vector<std::size_t> find_single_values(std::string_view text);

}  // namespace vch::vc
