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

// Data model shared by every protocol: model targets, turns and transcripts.

#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vch::core {

enum class Role { kOperator, kModel, kSystem };

enum class Protocol {
  kVc,
  kVcAblationA,
  kVcAblationB,
  kFdLite,
  kCp43,
  kProbe,
  kFreeform,
};

enum class LanguageMode { kRu, kEn, kMix };

std::string_view to_string(Role role);
std::string_view to_string(Protocol protocol);
std::string_view to_string(LanguageMode mode);

std::optional<Role> parse_role(std::string_view text);
std::optional<Protocol> parse_protocol(std::string_view text);
std::optional<LanguageMode> parse_language_mode(std::string_view text);

// Sampling defaults follow the platform defaults used in the original runs.
inline constexpr double kDefaultTemperature = 1.0;
inline constexpr double kDefaultTopP = 1.0;

struct ModelTarget {
  std::string name;
  // Opaque key into transport configuration; sent as the wire "model" field
  // when set, otherwise name is sent.
  std::string endpoint_id;
  double temperature = kDefaultTemperature;
  double top_p = kDefaultTopP;
  std::map<std::string, std::string> extra_params;

  // Throws ValidationError: empty name, temperature outside [0, 2], top_p
  // outside [0, 1], or either not finite.
  void validate() const;

  bool operator==(const ModelTarget&) const = default;
};

using Timestamp =
    std::chrono::sys_time<std::chrono::milliseconds>;

// "2025-10-31T14:05:09.120Z". Parsing also accepts the form without
// milliseconds.
std::string format_timestamp(Timestamp ts);
std::optional<Timestamp> parse_timestamp(std::string_view text);

struct Turn {
  std::size_t index = 0;
  Role role = Role::kOperator;
  std::string text;
  std::optional<Timestamp> timestamp;
  std::set<std::string> tags;

  bool has_tag(std::string_view tag) const;

  bool operator==(const Turn&) const = default;
};

struct Transcript {
  std::string session_id;
  std::string run_id;
  Protocol protocol = Protocol::kFreeform;
  ModelTarget model;
  std::vector<Turn> turns;

  // Appends a turn with the next contiguous index and returns it.
  Turn& append(Role role, std::string text, std::set<std::string> tags = {});

  // Model turns in order.
  std::vector<const Turn*> model_turns() const;
  std::size_t model_turn_count() const;

  // Throws ValidationError on empty session id, invalid model, or turn
  // indexes that are not exactly 0, 1, 2, ...
  void validate() const;

  bool operator==(const Transcript&) const = default;
};

// Tags the harness writes onto turns.
namespace tags {
inline constexpr std::string_view kProtocolViolation = "protocol-violation";
inline constexpr std::string_view kSessionAborted = "session-aborted";
}  // namespace tags

}  // namespace vch::core
