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

#include "vch/fdlite/probe.h"

#include <charconv>
#include <cmath>

#include "vch/core/error.h"
#include "vch/core/text.h"

namespace vch::fdlite {
namespace {

constexpr std::string_view kTagPrefix = "probe:";

std::string strip_approx(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '~') {
      ++i;
    } else if (text.substr(i).starts_with("\xE2\x89\x88")) {  // U+2248
      i += 3;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::optional<double> number(std::string_view text) {
  text = core::trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

bool detect_mismatch(double tension, double topic_risk, double threshold) {
  if (!std::isfinite(tension) || tension < 0.0 || tension > 10.0) {
    throw ValidationError("tension must be in [0, 10]");
  }
  if (!std::isfinite(topic_risk) || topic_risk < 1.0 || topic_risk > 10.0) {
    throw ValidationError("topic risk must be in [1, 10]");
  }
  if (!std::isfinite(threshold)) {
    throw ValidationError("mismatch threshold must be finite");
  }
  return tension - topic_risk >= threshold;
}

double ProbeValue::operative() const {
  switch (kind) {
    case Kind::kPoint:
      return first;
    case Kind::kRange:
      return (first + last) / 2.0;
    case Kind::kTransition:
      return last;
  }
  return first;
}

double ProbeValue::min() const { return std::min(first, last); }
double ProbeValue::max() const { return std::max(first, last); }

ProbeValue parse_probe_value(std::string_view text) {
  const std::string cleaned = strip_approx(text);
  ProbeValue v;
  v.raw = std::string(core::trim(text));
  std::string_view body = cleaned;
  std::size_t sep = body.find("->");
  std::size_t sep_len = 2;
  v.kind = ProbeValue::Kind::kTransition;
  if (sep == std::string_view::npos) {
    sep = body.find("..");
    v.kind = ProbeValue::Kind::kRange;
  }
  if (sep == std::string_view::npos) {
    v.kind = ProbeValue::Kind::kPoint;
    const auto n = number(body);
    if (!n) {
      throw ParseError("probe value is not a number: '" + v.raw + "'",
                       std::string(text));
    }
    v.first = v.last = *n;
    return v;
  }
  const auto a = number(body.substr(0, sep));
  const auto b = number(body.substr(sep + sep_len));
  if (!a || !b) {
    throw ParseError("malformed probe value: '" + v.raw + "'",
                     std::string(text), sep);
  }
  v.first = *a;
  v.last = *b;
  if (v.kind == ProbeValue::Kind::kRange && v.first > v.last) {
    throw ParseError("probe range is reversed: '" + v.raw + "'",
                     std::string(text), sep);
  }
  return v;
}

std::string probe_tag(std::string_view key, std::string_view value) {
  return std::string(kTagPrefix) + std::string(key) + "=" + std::string(value);
}

std::vector<ProbeRow> extract_probe_rows(const core::Transcript& transcript,
                                         double threshold) {
  std::vector<ProbeRow> rows;
  for (const auto& turn : transcript.turns) {
    ProbeRow row;
    bool has_phase = false;
    for (const auto& tag : turn.tags) {
      if (!std::string_view(tag).starts_with(kTagPrefix)) continue;
      const std::string_view body = std::string_view(tag).substr(kTagPrefix.size());
      const std::size_t eq = body.find('=');
      const std::string where = "session '" + transcript.session_id +
                                "' turn " + std::to_string(turn.index);
      if (eq == std::string_view::npos) {
        throw ParseError(where + ": probe tag without '=': " + tag, tag);
      }
      const std::string_view key = body.substr(0, eq);
      const std::string_view value = body.substr(eq + 1);
      try {
        if (key == probe_keys::kPhase) {
          row.phase = std::string(value);
          has_phase = true;
        } else if (key == probe_keys::kTrust) {
          row.trust = parse_probe_value(value);
        } else if (key == probe_keys::kRisk) {
          row.risk = parse_probe_value(value);
        } else if (key == probe_keys::kTension) {
          row.tension = parse_probe_value(value);
        } else if (key == probe_keys::kMarkers) {
          row.markers = std::string(value);
        } else if (key == probe_keys::kNotes) {
          row.notes = std::string(value);
        } else {
          throw ParseError("unknown probe key '" + std::string(key) + "'", tag);
        }
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), tag);
      }
    }
    if (!has_phase) continue;
    row.session_id = transcript.session_id;
    row.turn_index = turn.index;
    if (row.risk && row.tension) {
      row.mismatch = detect_mismatch(row.tension->operative(),
                                     row.risk->operative(), threshold);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vch::fdlite
