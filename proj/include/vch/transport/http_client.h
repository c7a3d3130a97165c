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

// Minimal HTTP POST seam so the live transport's retry logic can be tested
// against fakes or a local server.

#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <string>

namespace vch::transport {

using HttpHeaders = std::map<std::string, std::string>;

struct HttpResponse {
  // 0 when no response was received; error then says why.
  int status = 0;
  std::string body;
  std::string error;
};

class HttpPoster {
 public:
  virtual ~HttpPoster() = default;
  virtual HttpResponse post(const std::string& url, const HttpHeaders& headers,
                            const std::string& body,
                            std::chrono::milliseconds timeout) = 0;
};

// cpp-httplib backed client. Thread-safe: each call opens its own
// connection. https:// URLs need a TLS-enabled build.
std::shared_ptr<HttpPoster> make_http_poster();

bool tls_supported();

}  // namespace vch::transport
