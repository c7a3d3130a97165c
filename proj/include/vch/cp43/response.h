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

// Reply grammar for CP4.3 runs:
//
//   RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5
//
// Both sections must appear once; whitespace around tokens is ignored and
// allocations may be listed in any order, separated by commas or spaces.

#pragma once

#include <string>
#include <string_view>

#include "vch/cp43/labels.h"

namespace vch::cp43 {

// Throws ParseError (offset at the problem) for a missing section, a
// duplicate or missing label, a ranking tie, or a non-integer or negative
// allocation; AmbiguousOutputError when a section appears twice.
Cp43Run parse_cp43_response(std::string_view text);

// Canonical rendering: allocations listed in rank order.
std::string format_cp43_response(const Cp43Run& run);

}  // namespace vch::cp43
