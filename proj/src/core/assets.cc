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

#include "vch/core/assets.h"

#include <fstream>
#include <sstream>

#include "vch/core/error.h"

namespace vch::core {
namespace {

std::string_view strip_blank_lines(std::string_view s) {
  while (!s.empty() && (s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

const std::map<std::string, std::string, std::less<>>& asset_table() {
  static const std::map<std::string, std::string, std::less<>> table = {
#include "default_assets.inc"
  };
  return table;
}

}  // namespace

const std::string& default_asset(std::string_view name) {
  const auto& table = asset_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw ConfigError("no built-in asset named '" + std::string(name) + "'");
  }
  return it->second;
}

std::string read_asset(const std::filesystem::path& dir, std::string_view name) {
  return read_text_file(dir / (std::string(name) + ".txt"));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_sections(std::string_view text) {
  std::vector<std::string> out;
  std::size_t section_start = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == "---") {
      out.emplace_back(strip_blank_lines(
          text.substr(section_start, line_start - section_start)));
      section_start = line_end + 1;
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (section_start <= text.size()) {
    out.emplace_back(strip_blank_lines(text.substr(section_start)));
  } else {
    out.emplace_back();
  }
  return out;
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const std::size_t open = tmpl.find("{{", i);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(i));
      break;
    }
    const std::size_t close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) {
      out.append(tmpl.substr(i));
      break;
    }
    out.append(tmpl.substr(i, open - i));
    const std::string name(tmpl.substr(open + 2, close - open - 2));
    if (const auto it = vars.find(name); it != vars.end()) {
      out.append(it->second);
    } else {
      out.append(tmpl.substr(open, close + 2 - open));
    }
    i = close + 2;
  }
  return out;
}

std::string with_framing(std::string_view framing, std::string_view prompt) {
  if (framing.empty()) return std::string(prompt);
  std::string out(framing);
  while (!out.empty() && (out.back() == '\n' || out.back() == ' ')) {
    out.pop_back();
  }
  out += "\n\n";
  out += prompt;
  return out;
}

}  // namespace vch::core
