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

#include "devolab/error.hpp"

namespace devolab {

namespace {
std::string describe(const std::vector<std::string>& missing) {
  std::string msg = "result store is incomplete; missing cells:";
  for (const auto& m : missing) msg += " " + m;
  return msg;
}
}  // namespace

IncompleteStoreError::IncompleteStoreError(std::vector<std::string> missing)
    : std::runtime_error(describe(missing)), missing_(std::move(missing)) {}

}  // namespace devolab
