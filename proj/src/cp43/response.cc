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

#include "vch/cp43/response.h"

#include <charconv>

#include "vch/core/error.h"

namespace vch::cp43 {
namespace {

constexpr std::string_view kRankKey = "RANK:";
constexpr std::string_view kAllocKey = "ALLOC:";

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_),
                     std::string(text_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<Label> label() {
    skip_space();
    if (pos_ + 2 > text_.size()) return std::nullopt;
    const auto l = parse_label(text_.substr(pos_, 2));
    // "X12" is not X1 followed by junk we silently accept.
    if (l && pos_ + 2 < text_.size() && text_[pos_ + 2] >= '0' &&
        text_[pos_ + 2] <= '9') {
      return std::nullopt;
    }
    if (l) pos_ += 2;
    return l;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') fail("negative allocation");
    while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') ++end;
    if (end == start) fail("non-integer allocation");
    // "12.5" or "12abc"; a trailing sentence period is fine.
    if (end < text_.size()) {
      const char next = text_[end];
      const bool fraction = next == '.' && end + 1 < text_.size() &&
                            text_[end + 1] >= '0' && text_[end + 1] <= '9';
      const bool glued = (next >= 'a' && next <= 'z') ||
                         (next >= 'A' && next <= 'Z') || next == '_';
      if (fraction || glued) {
        pos_ = end;
        fail("non-integer allocation");
      }
    }
    int v = 0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + end, v);
    if (ec != std::errc() || ptr != text_.data() + end) {
      fail("allocation out of range");
    }
    pos_ = end;
    return v;
  }

  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t find_section(std::string_view text, std::string_view key) {
  const std::size_t first = text.find(key);
  if (first == std::string_view::npos) {
    throw ParseError("missing section " + std::string(key), std::string(text));
  }
  const std::size_t second = text.find(key, first + key.size());
  if (second != std::string_view::npos) {
    throw AmbiguousOutputError("ambiguous output: section " + std::string(key) +
                                   " appears more than once",
                               std::string(text), second);
  }
  return first + key.size();
}

}  // namespace

Cp43Run parse_cp43_response(std::string_view text) {
  Cp43Run run;
  Cursor c(text);

  c.seek(find_section(text, kRankKey));
  std::array<bool, kLabelCount> seen{};
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    if (i > 0 && !c.eat('>')) {
      c.skip_space();
      if (c.eat('=') || c.eat('~')) c.fail("tie in rank");
      for (Label l : kAllLabels) {
        if (!seen[index(l)]) c.fail("missing label " + std::string(to_string(l)));
      }
      c.fail("expected '>' in RANK");
    }
    const std::size_t at = c.pos();
    const auto l = c.label();
    if (!l) c.fail("expected a label X1..X6 in RANK");
    if (seen[index(*l)]) {
      c.seek(at);
      c.fail("duplicate label " + std::string(to_string(*l)) + " in RANK");
    }
    seen[index(*l)] = true;
    run.rank[i] = *l;
  }
  if (c.eat('>')) c.fail("more than six labels in RANK");

  c.seek(find_section(text, kAllocKey));
  std::array<bool, kLabelCount> have{};
  for (std::size_t n = 0;; ++n) {
    const std::size_t before = c.pos();
    if (n > 0) c.eat(',');
    const std::size_t at = c.pos();
    const auto l = c.label();
    if (!l) {
      c.seek(before);
      break;
    }
    if (have[index(*l)]) {
      c.seek(at);
      c.fail("duplicate label " + std::string(to_string(*l)) + " in ALLOC");
    }
    if (!c.eat('=')) c.fail("expected '=' after " + std::string(to_string(*l)));
    run.alloc[index(*l)] = c.integer();
    have[index(*l)] = true;
  }
  for (Label l : kAllLabels) {
    if (!have[index(l)]) {
      c.fail("missing label " + std::string(to_string(l)) + " in ALLOC");
    }
  }
  return run;
}

std::string format_cp43_response(const Cp43Run& run) {
  std::string out(kRankKey);
  out += ' ';
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    if (i > 0) out += '>';
    out += to_string(run.rank[i]);
  }
  out += "; ";
  out += kAllocKey;
  out += ' ';
  for (std::size_t i = 0; i < kLabelCount; ++i) {
    if (i > 0) out += ", ";
    out += to_string(run.rank[i]);
    out += '=';
    out += std::to_string(run.at(run.rank[i]));
  }
  return out;
}

}  // namespace vch::cp43
