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

// Pressure-risk mismatch probe: operator annotations recorded as turn tags
// and the mismatch rule applied to them. The harness never estimates risk or
// tension itself; it only reads what was annotated.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/transcript.h"

namespace vch::fdlite {

inline constexpr double kDefaultMismatchThreshold = 3.0;

// True iff tension - topic_risk >= threshold. Throws ValidationError when
// tension is outside [0, 10], topic_risk outside [1, 10], or any input is
// not finite.
bool detect_mismatch(double tension, double topic_risk,
                     double threshold = kDefaultMismatchThreshold);

// An annotated number: "3", "8..9.5" (a range) or "5->3" (a change within
// the phase). "~" and "≈" are accepted and ignored; raw keeps the text.
struct ProbeValue {
  enum class Kind { kPoint, kRange, kTransition };

  Kind kind = Kind::kPoint;
  double first = 0.0;
  double last = 0.0;
  std::string raw;

  // Range midpoint, final value of a transition, or the point itself.
  double operative() const;
  double min() const;
  double max() const;

  bool operator==(const ProbeValue&) const = default;
};

// Throws ParseError on anything else.
ProbeValue parse_probe_value(std::string_view text);

// Tag keys, written as "probe:<key>=<value>".
namespace probe_keys {
inline constexpr std::string_view kPhase = "phase";
inline constexpr std::string_view kTrust = "trust";
inline constexpr std::string_view kRisk = "risk";
inline constexpr std::string_view kTension = "tension";
inline constexpr std::string_view kMarkers = "markers";
inline constexpr std::string_view kNotes = "notes";
}  // namespace probe_keys

std::string probe_tag(std::string_view key, std::string_view value);

struct ProbeRow {
  std::string session_id;
  std::size_t turn_index = 0;
  std::string phase;
  std::optional<ProbeValue> trust;
  std::optional<ProbeValue> risk;
  std::optional<ProbeValue> tension;
  // Free-text marker annotation; a different scale from the 0-3 score, kept
  // as written.
  std::string markers;
  std::string notes;
  // Set when both risk and tension are annotated.
  std::optional<bool> mismatch;
};

// One row per turn carrying a probe:phase tag, in turn order. Unknown probe
// keys and malformed values throw ParseError naming the session and turn.
std::vector<ProbeRow> extract_probe_rows(
    const core::Transcript& transcript,
    double threshold = kDefaultMismatchThreshold);

}  // namespace vch::fdlite
