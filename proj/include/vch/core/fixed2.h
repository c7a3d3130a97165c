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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vch::core {

// Exact decimal with two fractional digits, stored as a count of hundredths.
// Confidence values and their differences live entirely in this domain, so
// comparisons and subtractions never touch binary floating point.
class Fixed2 {
 public:
  constexpr Fixed2() = default;

  static constexpr Fixed2 from_hundredths(std::int64_t h) { return Fixed2(h); }

  // Rounds half away from zero.
  static Fixed2 round_from_double(double v);

  constexpr std::int64_t hundredths() const { return hundredths_; }
  double to_double() const { return static_cast<double>(hundredths_) / 100.0; }

  // "0.35", "-0.04", "1.00".
  std::string to_string() const;
  // Like to_string() but always carries a sign: "+0.04", "-0.04", "0.00".
  std::string to_signed_string() const;

  constexpr auto operator<=>(const Fixed2&) const = default;

  friend constexpr Fixed2 operator-(Fixed2 a, Fixed2 b) {
    return Fixed2(a.hundredths_ - b.hundredths_);
  }
  friend constexpr Fixed2 operator+(Fixed2 a, Fixed2 b) {
    return Fixed2(a.hundredths_ + b.hundredths_);
  }
  constexpr Fixed2 operator-() const { return Fixed2(-hundredths_); }

 private:
  constexpr explicit Fixed2(std::int64_t h) : hundredths_(h) {}
  std::int64_t hundredths_ = 0;
};

// Parses an optionally signed decimal with exactly two fractional digits
// ("0.35", "+0.04", "-1.20"). Anything else yields nullopt.
std::optional<Fixed2> parse_fixed2(std::string_view text);

}  // namespace vch::core
