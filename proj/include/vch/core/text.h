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

// Small UTF-8 text helpers: decoding, Latin/Cyrillic script classes,
// whitespace tokenization and case folding for lexicon matching.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vch::core {

enum class Script { kNone, kLatin, kCyrillic };

// Decodes UTF-8; each malformed byte becomes U+FFFD.
std::u32string decode_utf8(std::string_view text);
void append_utf8(std::u32string_view cps, std::string& out);

Script script_of(char32_t cp);

// Majority class among Latin and Cyrillic letters of the token. Tokens with
// no such letters, or an exact tie, are kNone.
Script dominant_script(std::string_view token);

// ASCII whitespace separated units; never returns empty tokens.
std::vector<std::string_view> split_whitespace(std::string_view text);

std::string_view trim(std::string_view text);

// Lowercases ASCII, Latin-1/Latin Extended-A pairs and basic Cyrillic. Other
// code points pass through unchanged.
std::string fold_case(std::string_view text);

// Strips leading and trailing characters that are neither letters nor
// digits (quotes, punctuation, dashes), then folds case.
std::string normalize_token(std::string_view token);

bool is_letter_or_digit(char32_t cp);

}  // namespace vch::core
