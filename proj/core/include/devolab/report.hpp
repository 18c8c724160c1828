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

#include <string>

#include "devolab/harness.hpp"

namespace devolab::report {

/// Markdown report: MOV tables per function class (2 decimals), a Cs table
/// with each column's minimum starred, and Q-measure tables per class sorted
/// ascending with "-" for runs that never converged. Missing cells render as
/// blanks.
std::string render_markdown(const harness::ResultStore& store,
                            const harness::ExperimentPlan& plan);

/// Two-decimal fixed formatting used by every report table.
std::string fixed2(double v);

}  // namespace devolab::report
