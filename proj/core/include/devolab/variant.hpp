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

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace devolab {

enum class Mutation {
  Rand1,
  Best1,
  Rand2,
  Best2,
  CurrentToRand1,
  CurrentToBest1,
  RandToBest1,
};

enum class Crossover { Binomial, Exponential };

/// Number of distinct non-target population members a strategy draws.
constexpr std::size_t donor_count(Mutation m) noexcept {
  switch (m) {
    case Mutation::Rand1: return 3;
    case Mutation::Best1: return 2;
    case Mutation::Rand2: return 5;
    case Mutation::Best2: return 4;
    case Mutation::CurrentToRand1: return 3;
    case Mutation::CurrentToBest1: return 2;
    case Mutation::RandToBest1: return 3;
  }
  return 0;
}

constexpr bool uses_best(Mutation m) noexcept {
  return m == Mutation::Best1 || m == Mutation::Best2 || m == Mutation::CurrentToBest1 ||
         m == Mutation::RandToBest1;
}

std::string_view mutation_name(Mutation m) noexcept;
std::string_view crossover_name(Crossover c) noexcept;

/// One of the fourteen mutation x crossover combinations, named in the usual
/// "base/pairs/crossover" form ("rand/1/bin", "current-to-best/1/exp").
struct VariantSpec {
  Mutation mutation = Mutation::Rand1;
  Crossover crossover = Crossover::Binomial;

  std::string name() const;

  /// Throws ConfigError listing every valid name when \p text is not one.
  static VariantSpec parse(std::string_view text);

  friend auto operator<=>(const VariantSpec&, const VariantSpec&) = default;
};

/// All variants in the conventional table order
/// (rand/1/bin, rand/1/exp, best/1/bin, ..., rand-to-best/1/exp).
const std::array<VariantSpec, 14>& all_variants();

/// Position of \p v in all_variants().
std::size_t variant_index(const VariantSpec& v) noexcept;

}  // namespace devolab
