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
#include <initializer_list>
#include <limits>
#include <random>
#include <string_view>

namespace devolab {

/// Run-local random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The conversions below are written out by hand rather than using
/// <random> distributions, whose algorithms differ between standard libraries.
/// Together they make a run reproducible from its seed on any platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi]. Degenerate intervals return lo exactly.
  double uniform(double lo, double hi) {
    if (lo == hi) return lo;
    const double v = lo + (hi - lo) * uniform01();
    return v > hi ? hi : v;
  }

  /// Unbiased integer in [0, n), Lemire's multiply-and-reject method. n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Folds a sequence of words into one seed: h = splitmix64(h ^ w) for each w,
/// starting from h = 0.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) noexcept;

/// Seed of one experiment cell run:
/// mix_seed({base, fnv1a64(variant_name), function_number, run_index}).
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view variant_name,
                          int function_number, std::uint64_t run_index) noexcept;

}  // namespace devolab
