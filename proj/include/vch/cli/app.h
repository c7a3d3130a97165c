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

// The vch command line. Subcommands:
//
//   run-vc         three-pass calibration (or one ablation variant)
//   run-ablation   both single-pass variants plus the multi-pass run
//   run-fdlite     anchor + trap + follow-ups audit
//   run-cp43       repeated rank/allocation sessions
//   audit          check a recorded corpus
//   report         tables and figure data for a recorded corpus
//   validate-corpus
//
// Exit status: 0 success, 1 protocol violations found, 2 configuration,
// transport, corpus or usage errors.

#pragma once

#include <iosfwd>

namespace vch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace vch::cli
