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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "devolab/benchmarks.hpp"
#include "devolab/record.hpp"
#include "devolab/rng.hpp"
#include "devolab/variant.hpp"

namespace devolab::de {

using Genome = std::vector<double>;

struct Individual {
  Genome genome;
  double fitness = 0.0;
};

struct Population {
  std::vector<Individual> members;
  std::size_t generation = 0;
  std::size_t best_index = 0;

  std::size_t size() const noexcept { return members.size(); }
  const Individual& best() const { return members[best_index]; }

  /// Recomputes best_index; ties go to the lowest index.
  void update_best();
};

struct ControlParams {
  int np = 60;
  int max_gen = 3000;
  std::int64_t max_fe = 180000;
  double f_low = 0.3;
  double f_high = 0.9;
  double cr = 0.9;
  double tolerance = 1e-12;
  bool k_equals_f = true;

  /// Throws ConfigError on out-of-range values or when np is too small for
  /// \p variant (the target plus its donors must be distinct).
  void validate(const VariantSpec& variant) const;
  void validate() const;
};

/// Scale factors for one generation.
struct Scales {
  double f = 0.0;
  double k = 0.0;
};

/// NP genomes drawn uniformly inside the bounds of \p fn, each evaluated once.
Population init_population(Rng& rng, const BenchmarkFn& fn, const ControlParams& params);

/// Draws F uniformly from [f_low, f_high]; K is F, or an independent draw
/// from the same range when k_equals_f is off.
Scales sample_f(Rng& rng, const ControlParams& params);

/// \p count distinct indices in [0, np), none equal to \p exclude. Uses a
/// partial Fisher-Yates shuffle over the admissible indices.
std::vector<std::size_t> distinct_indices(Rng& rng, std::span<const std::size_t> exclude,
                                          std::size_t count, std::size_t np);

/// Mutant vector for target \p target. Donors are drawn from \p rng, excluding
/// only the target itself. No bound repair.
Genome mutate(const VariantSpec& spec, const Population& pop, std::size_t target,
              const Scales& scales, Rng& rng);

/// Mutant from explicitly given donors (used by mutate and by tests).
Genome mutate_with(Mutation m, const Population& pop, std::size_t target,
                   std::span<const std::size_t> donors, const Scales& scales);

Genome crossover_binomial(std::span<const double> target, std::span<const double> mutant,
                          double cr, Rng& rng);

/// Copies a circular block of mutant components starting at a uniform index;
/// the block grows while a uniform draw is below cr, up to the full length.
Genome crossover_exponential(std::span<const double> target, std::span<const double> mutant,
                             double cr, Rng& rng);

Genome crossover(Crossover scheme, std::span<const double> target,
                 std::span<const double> mutant, double cr, Rng& rng);

/// Clamps every component into [lower, upper].
void clamp_to_bounds(Genome& g, double lower, double upper) noexcept;

/// One-to-one replacement: the trial wins ties.
Individual select(const Individual& target, Genome trial_genome, double trial_fitness);

struct RunState {
  Population population;
  std::int64_t fe_count = 0;
  Individual best_ever;
  Scales scales;
  Rng rng;

  explicit RunState(std::uint64_t seed) : rng(seed) {}
};

/// Snapshot handed to a run observer after initialization and after every
/// generation.
struct Progress {
  std::size_t generation = 0;
  std::int64_t fe_count = 0;
  double best_ever = 0.0;
  const Population* population = nullptr;
};

using Observer = std::function<void(const Progress&)>;

/// A single DE run, steppable one generation at a time.
///
/// Generations are synchronous: every trial of generation G competes against
/// its generation-G parent and X_best is fixed for the whole generation.
/// The run stops after the generation in which best-ever fitness reaches the
/// tolerance, or when another generation would exceed max_fe or max_gen.
class Evolution {
 public:
  Evolution(VariantSpec spec, BenchmarkFn fn, ControlParams params, std::uint64_t seed);

  bool done() const noexcept;
  void step();
  void run_to_end(const Observer& observer = {});

  const RunState& state() const noexcept { return state_; }
  RunRecord record() const;

 private:
  VariantSpec spec_;
  BenchmarkFn fn_;
  ControlParams params_;
  std::uint64_t seed_;
  RunState state_;
};

/// Full run from a seed. Deterministic in (spec, fn, params, seed).
RunRecord run(const VariantSpec& spec, const BenchmarkFn& fn, const ControlParams& params,
              std::uint64_t seed, const Observer& observer = {});

}  // namespace devolab::de
