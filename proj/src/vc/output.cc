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

#include "vch/vc/output.h"

#include <algorithm>

#include "vch/core/error.h"

namespace vch::vc {
namespace {

constexpr std::size_t kValueLen = 4;  // "0.xx" / "1.00"

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Value starting at pos, if any.
std::optional<core::Fixed2> value_at(std::string_view s, std::size_t pos) {
  if (pos + kValueLen > s.size()) return std::nullopt;
  const std::string_view v = s.substr(pos, kValueLen);
  if (v == "1.00") return core::Fixed2::from_hundredths(100);
  if (v[0] == '0' && v[1] == '.' && is_digit(v[2]) && is_digit(v[3])) {
    return core::Fixed2::from_hundredths((v[2] - '0') * 10 + (v[3] - '0'));
  }
  return std::nullopt;
}

struct ModeMatch {
  core::LanguageMode mode;
  std::size_t length;
};

std::optional<ModeMatch> mode_at(std::string_view s, std::size_t pos) {
  const std::string_view rest = s.substr(std::min(pos, s.size()));
  if (rest.starts_with("MIX")) return ModeMatch{core::LanguageMode::kMix, 3};
  if (rest.starts_with("RU")) return ModeMatch{core::LanguageMode::kRu, 2};
  if (rest.starts_with("EN")) return ModeMatch{core::LanguageMode::kEn, 2};
  return std::nullopt;
}

std::optional<VcTrajectory> line_at(std::string_view s, std::size_t pos) {
  VcTrajectory out;
  core::Fixed2* slots[] = {&out.t0, &out.t1, &out.t2};
  std::size_t p = pos;
  for (int i = 0; i < 3; ++i) {
    const auto v = value_at(s, p);
    if (!v) return std::nullopt;
    *slots[i] = *v;
    out.uses_one = out.uses_one || v->hundredths() == 100;
    p += kValueLen;
    const char sep = i < 2 ? '/' : '|';
    if (p >= s.size() || s[p] != sep) return std::nullopt;
    ++p;
  }
  const auto mode = mode_at(s, p);
  if (!mode) return std::nullopt;
  out.mode = mode->mode;
  out.offset = pos;
  out.length = p + mode->length - pos;
  out.monotone = strictly_increasing(out.t0, out.t1, out.t2);
  return out;
}

std::string excerpt(std::string_view text) {
  constexpr std::size_t kMax = 400;
  if (text.size() <= kMax) return std::string(text);
  return std::string(text.substr(0, kMax)) + "...";
}

}  // namespace

bool strictly_increasing(core::Fixed2 a, core::Fixed2 b, core::Fixed2 c) {
  return a < b && b < c;
}

std::vector<std::size_t> find_vc_lines(std::string_view text) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (line_at(text, i)) hits.push_back(i);
  }
  return hits;
}

VcTrajectory parse_vc_output(std::string_view text) {
  const auto hits = find_vc_lines(text);
  if (hits.empty()) {
    throw ParseError("no calibration line of the form 0.xx/0.xx/0.xx|MODE in: " +
                         excerpt(text),
                     std::string(text));
  }
  if (hits.size() > 1) {
    throw AmbiguousOutputError(
        "ambiguous output: " + std::to_string(hits.size()) +
            " calibration lines found",
        std::string(text), hits[1]);
  }
  return *line_at(text, hits.front());
}

std::string format_vc_output(const VcTrajectory& t) {
  return t.t0.to_string() + "/" + t.t1.to_string() + "/" + t.t2.to_string() +
         "|" + std::string(core::to_string(t.mode));
}

std::vector<std::size_t> find_single_values(std::string_view text) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i + kValueLen <= text.size(); ++i) {
    if (!value_at(text, i)) continue;
    if (i > 0 && (is_digit(text[i - 1]) || text[i - 1] == '.')) continue;
    const std::size_t end = i + kValueLen;
    if (end < text.size() && is_digit(text[end])) continue;
    hits.push_back(i);
  }
  return hits;
}

core::Fixed2 parse_single_value(std::string_view text) {
  const auto hits = find_single_values(text);
  if (hits.empty()) {
    throw ParseError("no 0.xx value in: " + excerpt(text), std::string(text));
  }
  if (hits.size() > 1) {
    throw AmbiguousOutputError("ambiguous output: " +
                                   std::to_string(hits.size()) +
                                   " values found",
                               std::string(text), hits[1]);
  }
  return *value_at(text, hits.front());
}

}  // namespace vch::vc
