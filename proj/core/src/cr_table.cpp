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

#include <array>
#include <charconv>
#include <string>
#include <string_view>

#include "devolab/error.hpp"
#include "devolab/metrics.hpp"

namespace devolab::metrics {

namespace {

// Tuned CR per variant-function pair. Rows follow all_variants(); each
// cell "a/b" in column c holds f(c+1) / f(c+8).
// clang-format off
constexpr std::array<std::array<std::string_view, 7>, 14> kCrRows = {{
    {"0.9/0.5", "0.2/0.1", "0.9/0.9", "0.5/0.1", "0.9/0.1", "0.2/0.1", "0.8/0.1"},  // rand/1/bin
    {"0.9/0.0", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // rand/1/exp
    {"0.1/0.1", "0.1/0.1", "0.5/0.1", "0.2/0.1", "0.8/0.3", "0.1/0.8", "0.7/0.1"},  // best/1/bin
    {"0.9/0.7", "0.8/0.9", "0.9/0.8", "0.9/0.8", "0.8/0.9", "0.8/0.8", "0.9/0.8"},  // best/1/exp
    {"0.3/0.2", "0.1/0.1", "0.9/0.1", "0.2/0.1", "0.9/0.1", "0.2/0.1", "0.9/0.1"},  // rand/2/bin
    {"0.9/0.3", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // rand/2/exp
    {"0.1/0.7", "0.3/0.1", "0.7/0.4", "0.2/0.1", "0.6/0.1", "0.1/0.1", "0.5/0.1"},  // best/2/bin
    {"0.9/0.3", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // best/2/exp
    {"0.5/0.4", "0.1/0.1", "0.9/0.1", "0.2/0.1", "0.1/0.2", "0.1/0.3", "0.2/0.1"},  // current-to-rand/1/bin
    {"0.9/0.3", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // current-to-rand/1/exp
    {"0.2/0.8", "0.1/0.1", "0.9/0.1", "0.2/0.2", "0.1/0.2", "0.3/0.1", "0.2/0.1"},  // current-to-best/1/bin
    {"0.9/0.1", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // current-to-best/1/exp
    {"0.1/0.8", "0.1/0.1", "0.9/0.9", "0.4/0.1", "0.8/0.1", "0.4/0.2", "0.8/0.1"},  // rand-to-best/1/bin
    {"0.9/0.4", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9", "0.9/0.9"},  // rand-to-best/1/exp
}};
// clang-format on

double parse_cr(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed CR table entry '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

double cr_lookup(const VariantSpec& variant, FunctionId fn) {
  const std::size_t row = variant_index(variant);
  const int n = function_number(fn);
  if (row >= kCrRows.size() || n < 1 || n > 14) {
    throw ConfigError("no tabulated CR for " + variant.name() + " on " + function_name(fn));
  }
  const auto col = static_cast<std::size_t>((n - 1) % 7);
  const std::string_view cell = kCrRows[row][col];
  const auto slash = cell.find('/');
  return parse_cr(n <= 7 ? cell.substr(0, slash) : cell.substr(slash + 1));
}

}  // namespace devolab::metrics
