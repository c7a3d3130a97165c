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

#include "vch/cli/config.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "vch/core/assets.h"
#include "vch/core/error.h"

namespace vch::cli {
namespace {

using Json = nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError(source_ + ": '" + key + "': " + what);
  }

  void only_keys(const Json& obj, const std::string& where,
                 std::initializer_list<std::string_view> keys) const {
    if (!obj.is_object()) fail(where, "must be an object");
    for (const auto& [key, _] : obj.items()) {
      std::string lower = key;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (lower.find("key") != std::string::npos && lower != "auth_env" &&
          lower.find("api") != std::string::npos) {
        fail(where + key,
             "credentials are read from the environment only; set auth_env");
      }
      if (lower == "token" || lower == "password" || lower == "secret") {
        fail(where + key,
             "credentials are read from the environment only; set auth_env");
      }
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail(where + key, "unknown key");
      }
    }
  }

  std::string str(const Json& j, const std::string& key) const {
    if (!j.is_string()) fail(key, "must be a string");
    return j.get<std::string>();
  }

  double num(const Json& j, const std::string& key) const {
    if (!j.is_number()) fail(key, "must be a number");
    return j.get<double>();
  }

  std::int64_t integer(const Json& j, const std::string& key) const {
    if (!j.is_number_integer()) fail(key, "must be an integer");
    return j.get<std::int64_t>();
  }

  std::map<std::string, std::string> str_map(const Json& j,
                                             const std::string& key) const {
    if (!j.is_object()) fail(key, "must be an object of strings");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) out[k] = str(v, key + "." + k);
    return out;
  }

 private:
  std::string source_;
};

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

}  // namespace

void HarnessConfig::validate() const {
  try {
    transport.validate();
    for (const auto& m : models) m.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  if (prompt_dir && !std::filesystem::is_directory(*prompt_dir)) {
    throw ConfigError("prompt directory not found: " + prompt_dir->string());
  }
  if (marker_config && !std::filesystem::is_regular_file(*marker_config)) {
    throw ConfigError("marker config not found: " + marker_config->string());
  }
  if (parallel == 0) throw ConfigError("parallel must be at least 1");
}

HarnessConfig parse_harness_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir,
                                   std::string_view source) {
  Reader r(source);
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  r.only_keys(j, "",
              {"transport", "models", "prompt_dir", "marker_config",
               "output_dir", "seed", "parallel", "template_vars"});
  HarnessConfig c;
  if (j.contains("transport")) {
    const Json& t = j["transport"];
    r.only_keys(t, "transport.",
                {"endpoint_url", "auth_env", "request_timeout_ms",
                 "max_retries", "retry_backoff_base_ms",
                 "rate_limit_per_minute", "headers"});
    auto& tc = c.transport;
    if (t.contains("endpoint_url")) {
      tc.endpoint_url = r.str(t["endpoint_url"], "transport.endpoint_url");
    }
    if (t.contains("auth_env")) tc.auth_env = r.str(t["auth_env"], "transport.auth_env");
    if (t.contains("request_timeout_ms")) {
      tc.request_timeout = std::chrono::milliseconds(
          r.integer(t["request_timeout_ms"], "transport.request_timeout_ms"));
    }
    if (t.contains("max_retries")) {
      tc.max_retries =
          static_cast<int>(r.integer(t["max_retries"], "transport.max_retries"));
    }
    if (t.contains("retry_backoff_base_ms")) {
      tc.retry_backoff_base = std::chrono::milliseconds(r.integer(
          t["retry_backoff_base_ms"], "transport.retry_backoff_base_ms"));
    }
    if (t.contains("rate_limit_per_minute")) {
      tc.rate_limit_per_minute =
          r.num(t["rate_limit_per_minute"], "transport.rate_limit_per_minute");
    }
    if (t.contains("headers")) {
      tc.headers = r.str_map(t["headers"], "transport.headers");
      for (const auto& [name, _] : tc.headers) {
        std::string lower = name;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        if (lower == "authorization" || lower == "x-api-key") {
          r.fail("transport.headers." + name,
                 "credentials are read from the environment only");
        }
      }
    }
  }
  if (j.contains("models")) {
    if (!j["models"].is_array()) r.fail("models", "must be an array");
    for (std::size_t i = 0; i < j["models"].size(); ++i) {
      const Json& m = j["models"][i];
      const std::string where = "models[" + std::to_string(i) + "].";
      r.only_keys(m, where,
                  {"name", "endpoint_id", "temperature", "top_p", "extra_params"});
      core::ModelTarget t;
      if (!m.contains("name")) r.fail(where + "name", "is required");
      t.name = r.str(m["name"], where + "name");
      if (m.contains("endpoint_id")) t.endpoint_id = r.str(m["endpoint_id"], where + "endpoint_id");
      if (m.contains("temperature")) t.temperature = r.num(m["temperature"], where + "temperature");
      if (m.contains("top_p")) t.top_p = r.num(m["top_p"], where + "top_p");
      if (m.contains("extra_params")) {
        t.extra_params = r.str_map(m["extra_params"], where + "extra_params");
      }
      c.models.push_back(std::move(t));
    }
  }
  if (j.contains("prompt_dir")) {
    c.prompt_dir = resolve(base_dir, r.str(j["prompt_dir"], "prompt_dir"));
  }
  if (j.contains("marker_config")) {
    c.marker_config = resolve(base_dir, r.str(j["marker_config"], "marker_config"));
  }
  if (j.contains("output_dir")) {
    c.output_dir = resolve(base_dir, r.str(j["output_dir"], "output_dir"));
  }
  if (j.contains("seed")) {
    const auto s = r.integer(j["seed"], "seed");
    if (s < 0) r.fail("seed", "must be non-negative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("parallel")) {
    const auto p = r.integer(j["parallel"], "parallel");
    if (p < 1) r.fail("parallel", "must be at least 1");
    c.parallel = static_cast<std::size_t>(p);
  }
  if (j.contains("template_vars")) {
    c.template_vars = r.str_map(j["template_vars"], "template_vars");
  }
  return c;
}

HarnessConfig load_harness_config(const std::filesystem::path& path) {
  return parse_harness_config(core::read_text_file(path), path.parent_path(),
                              path.string());
}

}  // namespace vch::cli
