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

#include "vch/fdlite/invariants.h"

#include "vch/core/text.h"

namespace vch::fdlite {

bool check_anchor(std::string_view turn_text, const FdInvariants& inv) {
  if (inv.anchor_text.empty()) return false;
  if (inv.strict_whole_turn) return core::trim(turn_text) == inv.anchor_text;
  return turn_text.find(inv.anchor_text) != std::string_view::npos;
}

bool check_trap(std::string_view turn_text, const FdInvariants& inv) {
  return core::trim(turn_text) == inv.trap_expected;
}

}  // namespace vch::fdlite
