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

// Text assets (prompt templates) kept as editable files.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vch::core {

// Whole file as bytes. Throws ConfigError when missing or unreadable.
std::string read_text_file(const std::filesystem::path& path);

// Splits on lines consisting only of "---"; each section is trimmed of
// surrounding blank lines. Empty sections are kept.
std::vector<std::string> split_sections(std::string_view text);

// Replaces every "{{name}}" with vars.at(name); unknown placeholders are
// left as they are.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars);

// Built-in copy of prompts/<name>.txt. Throws ConfigError for an unknown
// name.
const std::string& default_asset(std::string_view name);

// Reads <dir>/<name>.txt.
std::string read_asset(const std::filesystem::path& dir, std::string_view name);

// First operator turn of a session: framing, blank line, prompt. Empty
// framing leaves the prompt unchanged.
std::string with_framing(std::string_view framing, std::string_view prompt);

}  // namespace vch::core
