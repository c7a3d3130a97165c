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

#include "vch/core/transcript.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

#include "vch/core/error.h"

namespace vch::core {
namespace {

constexpr std::array<std::pair<Role, std::string_view>, 3> kRoles{{
    {Role::kOperator, "operator"},
    {Role::kModel, "model"},
    {Role::kSystem, "system"},
}};

constexpr std::array<std::pair<Protocol, std::string_view>, 7> kProtocols{{
    {Protocol::kVc, "vc"},
    {Protocol::kVcAblationA, "vc-ablation-a"},
    {Protocol::kVcAblationB, "vc-ablation-b"},
    {Protocol::kFdLite, "fdlite"},
    {Protocol::kCp43, "cp43"},
    {Protocol::kProbe, "probe"},
    {Protocol::kFreeform, "freeform"},
}};

constexpr std::array<std::pair<LanguageMode, std::string_view>, 3> kModes{{
    {LanguageMode::kRu, "RU"},
    {LanguageMode::kEn, "EN"},
    {LanguageMode::kMix, "MIX"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>&
                             table,
                         Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> value_of(
    const std::array<std::pair<Enum, std::string_view>, N>& table,
    std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

bool parse_digits(std::string_view s, int& out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::string_view to_string(Role role) { return name_of(kRoles, role); }
std::string_view to_string(Protocol protocol) {
  return name_of(kProtocols, protocol);
}
std::string_view to_string(LanguageMode mode) { return name_of(kModes, mode); }

std::optional<Role> parse_role(std::string_view text) {
  return value_of(kRoles, text);
}
std::optional<Protocol> parse_protocol(std::string_view text) {
  return value_of(kProtocols, text);
}
std::optional<LanguageMode> parse_language_mode(std::string_view text) {
  return value_of(kModes, text);
}

void ModelTarget::validate() const {
  if (name.empty()) throw ValidationError("model name must be non-empty");
  if (!std::isfinite(temperature) || temperature < 0.0 || temperature > 2.0) {
    throw ValidationError("temperature must be finite and in [0, 2]");
  }
  if (!std::isfinite(top_p) || top_p < 0.0 || top_p > 1.0) {
    throw ValidationError("top_p must be finite and in [0, 1]");
  }
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day = floor<days>(ts);
  const year_month_day ymd{day};
  const hh_mm_ss<milliseconds> tod{ts - day};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod.hours().count()),
                static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()),
                static_cast<int>(tod.subseconds().count()));
  return buf;
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS[.mmm]Z
  if (text.size() != 20 && text.size() != 24) return std::nullopt;
  if (text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
      text[16] != ':' || text.back() != 'Z') {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0, ms = 0;
  if (!parse_digits(text.substr(0, 4), y) ||
      !parse_digits(text.substr(5, 2), mo) ||
      !parse_digits(text.substr(8, 2), d) ||
      !parse_digits(text.substr(11, 2), h) ||
      !parse_digits(text.substr(14, 2), mi) ||
      !parse_digits(text.substr(17, 2), s)) {
    return std::nullopt;
  }
  if (text.size() == 24) {
    if (text[19] != '.' || !parse_digits(text.substr(20, 3), ms)) {
      return std::nullopt;
    }
  }
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) return std::nullopt;
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} +
         milliseconds{ms};
}

bool Turn::has_tag(std::string_view tag) const {
  return tags.find(std::string(tag)) != tags.end();
}

Turn& Transcript::append(Role role, std::string text,
                         std::set<std::string> tag_set) {
  Turn turn;
  turn.index = turns.size();
  turn.role = role;
  turn.text = std::move(text);
  turn.tags = std::move(tag_set);
  turns.push_back(std::move(turn));
  return turns.back();
}

std::vector<const Turn*> Transcript::model_turns() const {
  std::vector<const Turn*> out;
  for (const auto& t : turns) {
    if (t.role == Role::kModel) out.push_back(&t);
  }
  return out;
}

std::size_t Transcript::model_turn_count() const {
  std::size_t n = 0;
  for (const auto& t : turns) n += t.role == Role::kModel ? 1 : 0;
  return n;
}

void Transcript::validate() const {
  if (session_id.empty()) {
    throw ValidationError("session id must be non-empty");
  }
  model.validate();
  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (turns[i].index != i) {
      throw ValidationError("session '" + session_id +
                            "': non-contiguous turn index " +
                            std::to_string(turns[i].index) + " at position " +
                            std::to_string(i));
    }
  }
}

}  // namespace vch::core
