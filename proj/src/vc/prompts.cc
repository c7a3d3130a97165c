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

#include "vch/vc/prompts.h"

#include "vch/core/assets.h"
#include "vch/core/error.h"

namespace vch::vc {
namespace {

void require_template(const std::string& text, std::string_view name,
                      bool needs_value) {
  if (text.empty()) {
    throw ValidationError("prompt template '" + std::string(name) +
                          "' is empty");
  }
  if (needs_value && text.find(kValuePlaceholder) == std::string::npos) {
    throw ValidationError("prompt template '" + std::string(name) +
                          "' does not request the 0.xx output format");
  }
}

}  // namespace

void VcPromptSet::validate() const {
  require_template(framing, "framing", false);
  require_template(pass1, "vc_pass1", true);
  require_template(pass2, "vc_pass2", true);
  require_template(pass3, "vc_pass3", true);
  require_template(single_pass_a, "vc_single_pass_a", true);
  require_template(single_pass_b, "vc_single_pass_b", true);
}

VcPromptSet VcPromptSet::rendered(
    const std::map<std::string, std::string>& vars) const {
  VcPromptSet out;
  out.framing = core::render_template(framing, vars);
  out.pass1 = core::render_template(pass1, vars);
  out.pass2 = core::render_template(pass2, vars);
  out.pass3 = core::render_template(pass3, vars);
  out.single_pass_a = core::render_template(single_pass_a, vars);
  out.single_pass_b = core::render_template(single_pass_b, vars);
  return out;
}

VcPromptSet VcPromptSet::defaults() {
  VcPromptSet p;
  p.framing = core::default_asset("framing");
  p.pass1 = core::default_asset("vc_pass1");
  p.pass2 = core::default_asset("vc_pass2");
  p.pass3 = core::default_asset("vc_pass3");
  p.single_pass_a = core::default_asset("vc_single_pass_a");
  p.single_pass_b = core::default_asset("vc_single_pass_b");
  return p;
}

VcPromptSet VcPromptSet::load(const std::filesystem::path& dir) {
  VcPromptSet p;
  p.framing = core::read_asset(dir, "framing");
  p.pass1 = core::read_asset(dir, "vc_pass1");
  p.pass2 = core::read_asset(dir, "vc_pass2");
  p.pass3 = core::read_asset(dir, "vc_pass3");
  p.single_pass_a = core::read_asset(dir, "vc_single_pass_a");
  p.single_pass_b = core::read_asset(dir, "vc_single_pass_b");
  p.validate();
  return p;
}

VcPromptSet VcPromptSet::from_recorded(const core::Transcript& transcript) {
  std::vector<std::string> asked;
  for (const auto& turn : transcript.turns) {
    if (turn.role == core::Role::kOperator) asked.push_back(turn.text);
  }
  VcPromptSet p;
  if (transcript.protocol == core::Protocol::kVc) {
    if (asked.size() != 3) {
      throw ValidationError("recorded VC session '" + transcript.session_id +
                            "' has " + std::to_string(asked.size()) +
                            " operator turns, expected 3");
    }
    p.pass1 = asked[0];
    p.pass2 = asked[1];
    p.pass3 = asked[2];
  } else if (transcript.protocol == core::Protocol::kVcAblationA ||
             transcript.protocol == core::Protocol::kVcAblationB) {
    if (asked.size() != 1) {
      throw ValidationError("recorded ablation session '" +
                            transcript.session_id +
                            "' must have exactly one operator turn");
    }
    p.single_pass_a = asked[0];
    p.single_pass_b = asked[0];
  } else {
    throw ValidationError("session '" + transcript.session_id +
                          "' is not a VC session");
  }
  return p;
}

}  // namespace vch::vc
