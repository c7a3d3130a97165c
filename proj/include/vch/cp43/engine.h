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

// CP4.3 sessions: one task prompt (optionally followed by a pressure
// variant) per independent session, repeated and aggregated.

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/session.h"
#include "vch/core/transcript.h"
#include "vch/cp43/check.h"
#include "vch/cp43/labels.h"
#include "vch/transport/chat.h"

namespace vch::cp43 {

namespace tags {
inline constexpr std::string_view kTask = "cp43:task";
inline constexpr std::string_view kRankChanged = "cp43:rank-changed";
inline constexpr std::string_view kM6Fail = "cp43:m6-fail";
inline constexpr std::string_view kSumOff = "cp43:sum-not-100";
}  // namespace tags

struct Cp43PromptSet {
  std::string framing;
  std::string task;
  // Run i uses pressure[i % size]; an empty variant means no pressure text.
  std::vector<std::string> pressure;

  // Throws ValidationError when the task prompt is empty.
  void validate() const;
  // Full operator message for run i.
  std::string prompt_for(std::size_t run_index) const;

  static Cp43PromptSet defaults();
  // framing.txt, cp43_task.txt and cp43_pressure.txt ("---" separated).
  static Cp43PromptSet load(const std::filesystem::path& dir);
  // The recorded operator message becomes the task; no framing or pressure.
  static Cp43PromptSet from_recorded(const core::Transcript& transcript);
};

core::Transcript conduct_cp43(transport::ChatTransport& transport,
                              std::string prompt,
                              const core::ModelTarget& model,
                              const core::SessionIds& ids);

struct Cp43RunOutcome {
  std::optional<Cp43Run> run;
  std::optional<Cp43Verdict> verdict;
  std::optional<std::string> violation;
};

// Parses and checks the last model turn, tagging it on failure. A parse
// failure is a protocol violation and leaves run empty.
Cp43RunOutcome analyze_cp43(core::Transcript& transcript,
                            std::size_t run_index,
                            const Rank& expected = kExpectedRank);

struct Cp43Batch {
  std::vector<core::Transcript> transcripts;
  std::vector<Cp43RunOutcome> outcomes;
  // Aggregate over the runs that parsed; empty when none did.
  std::optional<RankStability> stability;
  std::size_t excluded_runs = 0;
  // Sessions cut short by the transport; their partial transcripts are in
  // transcripts, their messages here.
  std::vector<std::string> aborted;
};

// Per-run factory: the transport to talk to and the ids and prompt to use.
struct Cp43SessionPlan {
  std::shared_ptr<transport::ChatTransport> transport;
  core::SessionIds ids;
  std::string prompt;
};
using Cp43Planner = std::function<Cp43SessionPlan(std::size_t run_index)>;

// Runs `repeats` independent sessions, at most `parallel` at a time, then
// analyzes them in run order. Throws ValidationError when repeats is 0.
Cp43Batch run_cp43(const Cp43Planner& plan, const core::ModelTarget& model,
                   std::size_t repeats, std::size_t parallel = 1,
                   const Rank& expected = kExpectedRank);

// Analysis of already recorded sessions, in the given order.
Cp43Batch analyze_cp43_batch(std::vector<core::Transcript> transcripts,
                             const Rank& expected = kExpectedRank);

}  // namespace vch::cp43
