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

#include <cstdint>

#include "devolab/benchmarks.hpp"
#include "devolab/variant.hpp"

namespace devolab {

/// Outcome of one seeded run.
struct RunRecord {
  VariantSpec variant;
  FunctionId function = FunctionId::f1;
  std::uint64_t run_index = 0;
  std::uint64_t seed = 0;
  double cr = 0.0;
  double final_best = 0.0;
  std::int64_t fe_used = 0;
  bool success = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

}  // namespace devolab
