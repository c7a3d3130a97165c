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

// JSON Lines persistence for transcripts.
//
// A corpus file is a sequence of sessions. Each session is one header line
//
//   {"kind":"session","session_id":...,"run_id":...,"protocol":...,
//    "model":{"name":...,"temperature":1.0,"top_p":1.0}}
//
// followed by one line per turn
//
//   {"kind":"turn","index":0,"role":"operator","text":"...","tags":[]}
//
// Keys are written in exactly that order. "model" may additionally carry
// "endpoint_id" and "extra_params", and a turn may carry "timestamp"; those
// keys are only written when set. Blank lines are ignored.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/transcript.h"

namespace vch::core {

// Reads a single .jsonl file, or every *.jsonl file below a directory
// (recursively, in lexicographic path order). Sessions are returned in file
// order. Throws CorpusError naming the line and field on malformed input or
// a duplicate session id, IoError when the path cannot be read.
std::vector<Transcript> load_corpus(const std::filesystem::path& path);

// Parses one stream; source_name only labels errors.
std::vector<Transcript> parse_corpus(std::istream& in,
                                     std::string_view source_name);

// Validates every transcript and rejects duplicate session ids before
// anything is written. The file is written to a sibling temporary and
// renamed into place.
void save_corpus(std::span<const Transcript> transcripts,
                 const std::filesystem::path& path);

void write_corpus(std::span<const Transcript> transcripts, std::ostream& out);

std::string header_line(const Transcript& transcript);
std::string turn_line(const Turn& turn);

// Throws ValidationError if any transcript is invalid or ids repeat.
void validate_corpus(std::span<const Transcript> transcripts);

}  // namespace vch::core
