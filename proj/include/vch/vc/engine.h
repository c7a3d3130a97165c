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

// Three-pass calibration sessions and the single-pass ablation.
//
// Every protocol is split into conduct_* (talks to the transport, returns
// the raw transcript) and analyze_* (pure, parses recorded replies), so a
// caller can persist the transcript before any analysis runs. run_* is the
// composition of the two.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vch/core/fixed2.h"
#include "vch/core/session.h"
#include "vch/core/transcript.h"
#include "vch/transport/chat.h"
#include "vch/vc/output.h"
#include "vch/vc/prompts.h"

namespace vch::vc {

namespace tags {
inline constexpr std::string_view kNonMonotone = "vc:non-monotone";
inline constexpr std::string_view kPermissiveOne = "vc:permissive-1.00";
inline constexpr std::string_view kModeDiscrepancy = "vc:mode-discrepancy";
}  // namespace tags

struct VcOutcome {
  core::Transcript transcript;
  std::optional<VcTrajectory> trajectory;
  // Set when the final reply broke the constrained grammar.
  std::optional<std::string> violation;
  // Script mix seen in the final reply outside the constrained line, when
  // it disagrees with the declared mode.
  std::optional<core::LanguageMode> observed_mode;
};

enum class AblationVariant { kA, kB };

std::string_view to_string(AblationVariant variant);

struct AblationResult {
  AblationVariant variant = AblationVariant::kA;
  core::Fixed2 t_star;
  std::optional<core::Fixed2> delta_vs_other;
  std::optional<core::Fixed2> delta_vs_multipass;
};

struct AblationOutcome {
  core::Transcript transcript;
  std::optional<AblationResult> result;
  std::optional<std::string> violation;
};

// Sends framing + pass 1, then pass 2, then pass 3, accumulating context.
// Throws core::SessionAborted on transport failure.
core::Transcript conduct_vc(transport::ChatTransport& transport,
                            const VcPromptSet& prompts,
                            const core::ModelTarget& model,
                            const core::SessionIds& ids);

// Parses the last model turn. A grammar failure is reported in
// VcOutcome::violation and tagged on that turn, never thrown.
VcOutcome analyze_vc(core::Transcript transcript);

VcOutcome run_vc(transport::ChatTransport& transport,
                 const VcPromptSet& prompts, const core::ModelTarget& model,
                 const core::SessionIds& ids);

// One operator turn: framing + the variant's single-pass prompt.
core::Transcript conduct_ablation(transport::ChatTransport& transport,
                                  const VcPromptSet& prompts,
                                  const core::ModelTarget& model,
                                  AblationVariant variant,
                                  const core::SessionIds& ids);

AblationOutcome analyze_ablation(core::Transcript transcript);

AblationOutcome run_ablation(transport::ChatTransport& transport,
                             const VcPromptSet& prompts,
                             const core::ModelTarget& model,
                             AblationVariant variant,
                             const core::SessionIds& ids);

struct AblationDeltas {
  core::Fixed2 b_minus_a;
  core::Fixed2 multipass_minus_b;
};

// B - A and multipass.t2 - B, both exact two-decimal differences. Throws
// ValidationError unless a is variant A and b is variant B.
AblationDeltas ablation_deltas(const AblationResult& a,
                               const AblationResult& b,
                               const VcTrajectory& multipass);

// What the script mix of text says its language mode is; nullopt when it
// has no Latin or Cyrillic words.
std::optional<core::LanguageMode> observed_language_mode(std::string_view text);

}  // namespace vch::vc
