// Copyright 2026 The devolab Authors.
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

#pragma once

#include <atomic>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace devolab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kIncompleteStore = 3,
  kInterrupted = 130,
};

struct Environment {
  /// Value of DEVOLAB_SEED; overrides --seed when set.
  std::optional<std::string> seed_override;
  /// Set asynchronously (e.g. from SIGINT) to stop starting new runs.
  const std::atomic<bool>* stop = nullptr;
};

/// Entry point shared by the executable and the tests. \p args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace devolab::cli
