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

#include "devolab/variant.hpp"

#include <algorithm>

#include "devolab/error.hpp"

namespace devolab {

std::string_view mutation_name(Mutation m) noexcept {
  switch (m) {
    case Mutation::Rand1: return "rand/1";
    case Mutation::Best1: return "best/1";
    case Mutation::Rand2: return "rand/2";
    case Mutation::Best2: return "best/2";
    case Mutation::CurrentToRand1: return "current-to-rand/1";
    case Mutation::CurrentToBest1: return "current-to-best/1";
    case Mutation::RandToBest1: return "rand-to-best/1";
  }
  return "?";
}

std::string_view crossover_name(Crossover c) noexcept {
  return c == Crossover::Binomial ? "bin" : "exp";
}

std::string VariantSpec::name() const {
  std::string out(mutation_name(mutation));
  out += '/';
  out += crossover_name(crossover);
  return out;
}

const std::array<VariantSpec, 14>& all_variants() {
  static const std::array<VariantSpec, 14> table = [] {
    std::array<VariantSpec, 14> t{};
    constexpr Mutation order[] = {Mutation::Rand1,          Mutation::Best1,
                                  Mutation::Rand2,          Mutation::Best2,
                                  Mutation::CurrentToRand1, Mutation::CurrentToBest1,
                                  Mutation::RandToBest1};
    std::size_t i = 0;
    for (auto m : order) {
      t[i++] = {m, Crossover::Binomial};
      t[i++] = {m, Crossover::Exponential};
    }
    return t;
  }();
  return table;
}

std::size_t variant_index(const VariantSpec& v) noexcept {
  const auto& all = all_variants();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), v) - all.begin());
}

VariantSpec VariantSpec::parse(std::string_view text) {
  for (const auto& v : all_variants()) {
    if (v.name() == text) return v;
  }
  std::string msg = "unknown variant '" + std::string(text) + "'; valid variants:";
  for (const auto& v : all_variants()) msg += " " + v.name();
  throw ConfigError(msg);
}

}  // namespace devolab
