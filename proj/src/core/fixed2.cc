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

#include "vch/core/fixed2.h"

#include <cmath>
#include <cstdlib>

#include "vch/core/error.h"

namespace vch::core {

Fixed2 Fixed2::round_from_double(double v) {
  if (!std::isfinite(v)) {
    throw ValidationError("cannot round a non-finite value to hundredths");
  }
  // std::round is half-away-from-zero.
  return Fixed2(static_cast<std::int64_t>(std::round(v * 100.0)));
}

std::string Fixed2::to_string() const {
  const std::int64_t mag = std::llabs(hundredths_);
  std::string out = hundredths_ < 0 ? "-" : "";
  out += std::to_string(mag / 100);
  out += '.';
  const std::int64_t frac = mag % 100;
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

std::string Fixed2::to_signed_string() const {
  if (hundredths_ > 0) return "+" + to_string();
  return to_string();
}

std::optional<Fixed2> parse_fixed2(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || text.size() - dot != 3) {
    return std::nullopt;
  }
  std::int64_t whole = 0;
  for (std::size_t i = 0; i < dot; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (whole > 1'000'000'000'000) return std::nullopt;
    whole = whole * 10 + (c - '0');
  }
  const char d1 = text[dot + 1];
  const char d2 = text[dot + 2];
  if (d1 < '0' || d1 > '9' || d2 < '0' || d2 > '9') return std::nullopt;
  const std::int64_t h = whole * 100 + (d1 - '0') * 10 + (d2 - '0');
  return Fixed2::from_hundredths(negative ? -h : h);
}

}  // namespace vch::core
