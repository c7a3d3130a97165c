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

// harness.json: one JSON document holding transport settings, model
// targets, asset locations and output directory. Secrets never live here;
// the API key is read from the environment variable named by auth_env.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vch/core/transcript.h"
#include "vch/transport/chat.h"

namespace vch::cli {

inline constexpr std::string_view kDefaultOutputDir = "vc_harness_out";

struct HarnessConfig {
  transport::TransportConfig transport;
  std::vector<core::ModelTarget> models;
  std::optional<std::filesystem::path> prompt_dir;
  std::optional<std::filesystem::path> marker_config;
  std::filesystem::path output_dir = std::string(kDefaultOutputDir);
  std::optional<std::uint64_t> seed;
  std::size_t parallel = 1;
  // Values for {{name}} placeholders in prompt templates.
  std::map<std::string, std::string> template_vars;

  // Throws ConfigError when a configured path does not exist or a model or
  // the transport section is invalid.
  void validate() const;
};

// {
//   "transport": {"endpoint_url": "...", "auth_env": "VC_HARNESS_API_KEY",
//                 "request_timeout_ms": 60000, "max_retries": 3,
//                 "retry_backoff_base_ms": 500, "rate_limit_per_minute": 30,
//                 "headers": {"X-Org": "..."}},
//   "models": [{"name": "...", "endpoint_id": "...", "temperature": 1.0,
//               "top_p": 1.0, "extra_params": {"k": "v"}}],
//   "prompt_dir": "prompts", "marker_config": "config/markers.json",
//   "output_dir": "vc_harness_out", "seed": 7, "parallel": 1,
//   "template_vars": {"evidence": "..."}
// }
//
// Every key is optional. Unknown keys, and any key that looks like a
// credential, are a ConfigError. Relative paths resolve against the
// directory holding the file.
HarnessConfig parse_harness_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir = {},
                                   std::string_view source = "<config>");
HarnessConfig load_harness_config(const std::filesystem::path& path);

}  // namespace vch::cli
