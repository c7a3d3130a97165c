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

// FD-Lite sessions: anchor prompt, trap prompt, then free follow-ups, with
// the audit computed from the recorded model turns.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/session.h"
#include "vch/core/transcript.h"
#include "vch/fdlite/invariants.h"
#include "vch/fdlite/markers.h"
#include "vch/transport/chat.h"

namespace vch::fdlite {

namespace tags {
// Operator turns.
inline constexpr std::string_view kAnchorPrompt = "fd:anchor-prompt";
inline constexpr std::string_view kTrapPrompt = "fd:trap-prompt";
inline constexpr std::string_view kFollowup = "fd:followup";
// Model turns the invariants are checked on.
inline constexpr std::string_view kAnchor = "fd:anchor";
inline constexpr std::string_view kTrap = "fd:trap";
inline constexpr std::string_view kAnchorMismatch = "fd:anchor-mismatch";
inline constexpr std::string_view kTrapNotBare = "fd:trap-not-bare";
}  // namespace tags

struct FdPromptSet {
  std::string framing;
  std::string anchor;
  std::string trap;
  std::vector<std::string> followups;

  // Throws ValidationError when the anchor or trap prompt is empty.
  void validate() const;

  static FdPromptSet defaults();
  // fdlite_anchor.txt, fdlite_trap.txt, fdlite_followups.txt ("---"
  // separated) and framing.txt from dir.
  static FdPromptSet load(const std::filesystem::path& dir);
  // The operator turns of a recorded session, in order: anchor, trap, then
  // follow-ups. Framing is folded into the anchor turn.
  static FdPromptSet from_recorded(const core::Transcript& transcript);
};

struct FdAudit {
  bool anchor_exact = false;
  bool trap_ack = false;
  MarkerMetrics metrics;
  MarkerScore score;
  // One score per third of the model turns; empty below three turns.
  std::vector<int> window_scores;

  bool passed() const { return anchor_exact && trap_ack; }
};

struct FdOutcome {
  core::Transcript transcript;
  FdAudit audit;
};

core::Transcript conduct_fdlite(transport::ChatTransport& transport,
                                const FdPromptSet& prompts,
                                const core::ModelTarget& model,
                                const core::SessionIds& ids);

// Pure audit of a recorded session. The anchor and trap replies are the
// model turns tagged fd:anchor / fd:trap, or else the first and second model
// turns. Metrics cover every model turn.
FdAudit audit_fdlite(const core::Transcript& transcript,
                     const MarkerConfig& config = MarkerConfig::defaults(),
                     const FdInvariants& inv = {});

// audit_fdlite plus tags on the offending turns when an invariant fails.
FdOutcome analyze_fdlite(core::Transcript transcript,
                         const MarkerConfig& config = MarkerConfig::defaults(),
                         const FdInvariants& inv = {});

FdOutcome run_fdlite(transport::ChatTransport& transport,
                     const FdPromptSet& prompts, const core::ModelTarget& model,
                     const core::SessionIds& ids,
                     const MarkerConfig& config = MarkerConfig::defaults(),
                     const FdInvariants& inv = {});

// Splits n items into three contiguous windows, earlier windows taking the
// remainder: 10 -> 4, 3, 3. Returns {begin, end} pairs; empty when n < 3.
std::vector<std::pair<std::size_t, std::size_t>> thirds(std::size_t n);

// "2→3→3"; a trajectory whose points are all equal prints as one value,
// and an empty one falls back to the overall score.
std::string format_score_trajectory(const std::vector<int>& windows,
                                    int overall);

std::string format_score_trajectory(const FdAudit& audit);

}  // namespace vch::fdlite
