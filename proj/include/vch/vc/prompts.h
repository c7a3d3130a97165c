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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "vch/core/assets.h"
#include "vch/core/transcript.h"

namespace vch::vc {

// Placeholder every pass template must contain to request the constrained
// numeric format.
inline constexpr std::string_view kValuePlaceholder = "0.xx";

// Prompt templates for one VC run. The built-in defaults are editable
// paraphrases, not canonical protocol text; see prompts/.
struct VcPromptSet {
  std::string framing;
  std::string pass1;
  std::string pass2;
  std::string pass3;
  std::string single_pass_a;
  std::string single_pass_b;

  // Throws ValidationError when a template is empty or a pass / single-pass
  // template does not request the 0.xx format.
  void validate() const;

  // Replaces {{name}} placeholders in every template.
  VcPromptSet rendered(const std::map<std::string, std::string>& vars) const;

  static VcPromptSet defaults();
  // Reads framing.txt, vc_pass1.txt ... vc_single_pass_b.txt from dir.
  static VcPromptSet load(const std::filesystem::path& dir);
  // Prompts that re-ask exactly what a recorded vc or vc-ablation session
  // asked; framing is folded into the first turn.
  static VcPromptSet from_recorded(const core::Transcript& transcript);
};

using core::with_framing;

}  // namespace vch::vc
