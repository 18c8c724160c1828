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

#include <doctest.h>

#include <set>

#include "devolab/error.hpp"
#include "devolab/rng.hpp"
#include "devolab/variant.hpp"

using namespace devolab;

TEST_CASE("variant names round-trip and there are fourteen") {
  const auto& all = all_variants();
  std::set<std::string> names;
  for (const auto& v : all) {
    names.insert(v.name());
    CHECK(VariantSpec::parse(v.name()) == v);
    CHECK(variant_index(v) < 14);
  }
  CHECK(names.size() == 14);
  CHECK(all.front().name() == "rand/1/bin");
  CHECK(all[1].name() == "rand/1/exp");
  CHECK(all.back().name() == "rand-to-best/1/exp");
  CHECK(VariantSpec{Mutation::CurrentToBest1, Crossover::Exponential}.name() == "current-to-best/1/exp");
  CHECK(VariantSpec{Mutation::CurrentToRand1, Crossover::Exponential}.name() == "current-to-rand/1/exp");
}

TEST_CASE("unknown variant lists every valid name") {
  try {
    VariantSpec::parse("rand/3/bin");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    for (const auto& v : all_variants()) CHECK(msg.find(v.name()) != std::string::npos);
  }
}

TEST_CASE("donor counts") {
  CHECK(donor_count(Mutation::Rand2) == 5);
  CHECK(donor_count(Mutation::Best2) == 4);
  CHECK(donor_count(Mutation::Rand1) == 3);
  CHECK(donor_count(Mutation::CurrentToBest1) == 2);
}

TEST_CASE("mt19937_64 stream matches the standard's reference value") {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  Rng rng(5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng();
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("uniform conversions") {
  Rng rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const auto k = rng.below(7);
    REQUIRE(k < 7);
  }
  CHECK(rng.uniform(2.5, 2.5) == 2.5);
}

TEST_CASE("below is unbiased for a non-power-of-two range") {
  Rng rng(2);
  std::vector<int> counts(3, 0);
  const int n = 90000;
  for (int i = 0; i < n; ++i) ++counts[rng.below(3)];
  for (int c : counts) CHECK(c == doctest::Approx(n / 3.0).epsilon(0.02));
}

TEST_CASE("seed derivation is stable and separates cells") {
  // Frozen: changing the derivation silently would break cross-run reproducibility.
  const auto s = derive_seed(7, "rand/1/bin", 1, 0);
  CHECK(s == derive_seed(7, "rand/1/bin", 1, 0));
  CHECK(s == mix_seed({7, fnv1a64("rand/1/bin"), 1, 0}));
  std::set<std::uint64_t> seen;
  for (const auto& v : all_variants()) {
    for (int f = 1; f <= 14; ++f) {
      for (std::uint64_t r = 0; r < 20; ++r) seen.insert(derive_seed(7, v.name(), f, r));
    }
  }
  CHECK(seen.size() == 14 * 14 * 20);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}
