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

#include "vch/core/text.h"

namespace vch::core {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Punctuation and symbol blocks above U+0370 that should not count as word
// characters when trimming tokens.
bool is_symbol_block(char32_t cp) {
  return in(cp, 0x2000, 0x2BFF) || in(cp, 0x2E00, 0x2E7F) ||
         in(cp, 0x3000, 0x303F) || in(cp, 0xFE30, 0xFE4F) ||
         in(cp, 0xFF01, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) ||
         in(cp, 0xFFF0, 0xFFFF) || in(cp, 0x1F000, 0x1FAFF);
}

char32_t fold(char32_t cp) {
  if (in(cp, 'A', 'Z')) return cp + 0x20;
  if (cp < 0x80) return cp;
  if (in(cp, 0x00C0, 0x00DE) && cp != 0x00D7) return cp + 0x20;
  if (in(cp, 0x0100, 0x0137) || in(cp, 0x014A, 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (in(cp, 0x0139, 0x0148) || in(cp, 0x0179, 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x0178) return 0x00FF;
  if (in(cp, 0x0410, 0x042F)) return cp + 0x20;
  if (in(cp, 0x0400, 0x040F)) return cp + 0x50;
  if (in(cp, 0x0460, 0x0481) || in(cp, 0x048A, 0x04BF) ||
      in(cp, 0x04D0, 0x052F)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (in(cp, 0x04C1, 0x04CE)) return (cp % 2 == 1) ? cp + 1 : cp;
  return cp;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (!ok || cp < kMin[len] || cp > 0x10FFFF || in(cp, 0xD800, 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::u32string_view cps, std::string& out) {
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }
}

Script script_of(char32_t cp) {
  if (in(cp, 'A', 'Z') || in(cp, 'a', 'z')) return Script::kLatin;
  if (cp < 0x80) return Script::kNone;
  if (cp == 0x00AA || cp == 0x00BA) return Script::kLatin;
  if (in(cp, 0x00C0, 0x024F) && cp != 0x00D7 && cp != 0x00F7) {
    return Script::kLatin;
  }
  if (in(cp, 0x1E00, 0x1EFF) || in(cp, 0x2C60, 0x2C7F) ||
      in(cp, 0xA720, 0xA7FF) || in(cp, 0xFF21, 0xFF3A) ||
      in(cp, 0xFF41, 0xFF5A)) {
    return Script::kLatin;
  }
  if (in(cp, 0x0400, 0x052F) || in(cp, 0x1C80, 0x1C8F) ||
      in(cp, 0x2DE0, 0x2DFF) || in(cp, 0xA640, 0xA69F)) {
    return Script::kCyrillic;
  }
  return Script::kNone;
}

Script dominant_script(std::string_view token) {
  int latin = 0;
  int cyrillic = 0;
  for (char32_t cp : decode_utf8(token)) {
    switch (script_of(cp)) {
      case Script::kLatin:
        ++latin;
        break;
      case Script::kCyrillic:
        ++cyrillic;
        break;
      case Script::kNone:
        break;
    }
  }
  if (latin > cyrillic) return Script::kLatin;
  if (cyrillic > latin) return Script::kCyrillic;
  return Script::kNone;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && is_ascii_space(text[b])) ++b;
  while (e > b && is_ascii_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

bool is_letter_or_digit(char32_t cp) {
  if (in(cp, '0', '9')) return true;
  if (script_of(cp) != Script::kNone) return true;
  if (cp < 0x0370) return false;
  return !is_symbol_block(cp);
}

std::string fold_case(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  for (auto& cp : cps) cp = fold(cp);
  std::string out;
  out.reserve(text.size());
  append_utf8(cps, out);
  return out;
}

std::string normalize_token(std::string_view token) {
  const std::u32string cps = decode_utf8(token);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && !is_letter_or_digit(cps[b])) ++b;
  while (e > b && !is_letter_or_digit(cps[e - 1])) --e;
  std::u32string core(cps.begin() + b, cps.begin() + e);
  for (auto& cp : core) cp = fold(cp);
  std::string out;
  append_utf8(core, out);
  return out;
}

}  // namespace vch::core
