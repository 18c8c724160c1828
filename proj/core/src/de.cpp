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

#include "devolab/de.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "devolab/error.hpp"

namespace devolab::de {

void Population::update_best() {
  best_index = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].fitness < members[best_index].fitness) best_index = i;
  }
}

void ControlParams::validate() const {
  if (np < 3) throw ConfigError("np must be at least 3, got " + std::to_string(np));
  if (max_gen < 1) throw ConfigError("max_gen must be positive");
  if (max_fe < np) throw ConfigError("max_fe must cover the initial population");
  if (!(f_low <= f_high) || !(f_low > 0.0) || !(f_high <= 2.0)) {
    throw ConfigError("F range must satisfy 0 < low <= high <= 2");
  }
  if (!(cr >= 0.0 && cr <= 1.0)) throw ConfigError("CR must lie in [0, 1]");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

void ControlParams::validate(const VariantSpec& variant) const {
  validate();
  const auto needed = donor_count(variant.mutation) + 1;
  if (static_cast<std::size_t>(np) < needed) {
    throw ConfigError(variant.name() + " needs np >= " + std::to_string(needed) + ", got " +
                      std::to_string(np));
  }
}

Population init_population(Rng& rng, const BenchmarkFn& fn, const ControlParams& params) {
  params.validate();
  if (!std::isfinite(fn.lower) || !std::isfinite(fn.upper) || fn.lower > fn.upper) {
    throw ConfigError("bounds of " + function_name(fn.id) + " are not a finite interval");
  }
  if (fn.dim < 1) throw ConfigError("dimension must be positive");

  Population pop;
  pop.members.resize(static_cast<std::size_t>(params.np));
  for (auto& ind : pop.members) {
    ind.genome.resize(static_cast<std::size_t>(fn.dim));
    for (auto& v : ind.genome) v = rng.uniform(fn.lower, fn.upper);
  }
  for (auto& ind : pop.members) ind.fitness = evaluate(fn, ind.genome, rng);
  pop.update_best();
  return pop;
}

Scales sample_f(Rng& rng, const ControlParams& params) {
  Scales s;
  s.f = rng.uniform(params.f_low, params.f_high);
  s.k = params.k_equals_f ? s.f : rng.uniform(params.f_low, params.f_high);
  return s;
}

std::vector<std::size_t> distinct_indices(Rng& rng, std::span<const std::size_t> exclude,
                                          std::size_t count, std::size_t np) {
  std::vector<std::size_t> pool;
  pool.reserve(np);
  for (std::size_t i = 0; i < np; ++i) {
    if (std::find(exclude.begin(), exclude.end(), i) == exclude.end()) pool.push_back(i);
  }
  if (pool.size() < count) {
    throw ConfigError("cannot draw " + std::to_string(count) + " distinct indices from " +
                      std::to_string(pool.size()) + " admissible members");
  }
  for (std::size_t k = 0; k < count; ++k) {
    const auto j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
    std::swap(pool[k], pool[j]);
  }
  pool.resize(count);
  return pool;
}

Genome mutate_with(Mutation m, const Population& pop, std::size_t target,
                   std::span<const std::size_t> donors, const Scales& scales) {
  const auto& x = [&](std::size_t idx) -> const Genome& { return pop.members[idx].genome; };
  const auto& current = x(target);
  const auto& best = pop.best().genome;
  const double f = scales.f;
  const double k = scales.k;
  const std::size_t dim = current.size();

  Genome v(dim);
  switch (m) {
    case Mutation::Rand1: {
      const auto &a = x(donors[0]), &b = x(donors[1]), &c = x(donors[2]);
      for (std::size_t j = 0; j < dim; ++j) v[j] = a[j] + f * (b[j] - c[j]);
      break;
    }
    case Mutation::Best1: {
      const auto &a = x(donors[0]), &b = x(donors[1]);
      for (std::size_t j = 0; j < dim; ++j) v[j] = best[j] + f * (a[j] - b[j]);
      break;
    }
    case Mutation::Rand2: {
      const auto &a = x(donors[0]), &b = x(donors[1]), &c = x(donors[2]), &d = x(donors[3]),
                 &e = x(donors[4]);
      for (std::size_t j = 0; j < dim; ++j) v[j] = a[j] + f * (b[j] - c[j] + d[j] - e[j]);
      break;
    }
    case Mutation::Best2: {
      const auto &a = x(donors[0]), &b = x(donors[1]), &c = x(donors[2]), &d = x(donors[3]);
      for (std::size_t j = 0; j < dim; ++j) v[j] = best[j] + f * (a[j] - b[j] + c[j] - d[j]);
      break;
    }
    case Mutation::CurrentToRand1: {
      const auto &a = x(donors[0]), &b = x(donors[1]), &c = x(donors[2]);
      for (std::size_t j = 0; j < dim; ++j) {
        v[j] = current[j] + k * (c[j] - current[j]) + f * (a[j] - b[j]);
      }
      break;
    }
    case Mutation::CurrentToBest1: {
      const auto &a = x(donors[0]), &b = x(donors[1]);
      for (std::size_t j = 0; j < dim; ++j) {
        v[j] = current[j] + k * (best[j] - current[j]) + f * (a[j] - b[j]);
      }
      break;
    }
    case Mutation::RandToBest1: {
      const auto &a = x(donors[0]), &b = x(donors[1]), &c = x(donors[2]);
      for (std::size_t j = 0; j < dim; ++j) {
        v[j] = a[j] + f * (best[j] - a[j]) + f * (b[j] - c[j]);
      }
      break;
    }
  }
  return v;
}

Genome mutate(const VariantSpec& spec, const Population& pop, std::size_t target,
              const Scales& scales, Rng& rng) {
  const std::size_t exclude[] = {target};
  const auto donors = distinct_indices(rng, exclude, donor_count(spec.mutation), pop.size());
  return mutate_with(spec.mutation, pop, target, donors, scales);
}

Genome crossover_binomial(std::span<const double> target, std::span<const double> mutant,
                          double cr, Rng& rng) {
  const std::size_t dim = target.size();
  const auto j_rand = static_cast<std::size_t>(rng.below(dim));
  Genome u(target.begin(), target.end());
  for (std::size_t j = 0; j < dim; ++j) {
    if (rng.uniform01() < cr || j == j_rand) u[j] = mutant[j];
  }
  return u;
}

Genome crossover_exponential(std::span<const double> target, std::span<const double> mutant,
                             double cr, Rng& rng) {
  const std::size_t dim = target.size();
  const auto start = static_cast<std::size_t>(rng.below(dim));
  Genome u(target.begin(), target.end());
  std::size_t length = 0;
  do {
    const std::size_t j = (start + length) % dim;
    u[j] = mutant[j];
    ++length;
  } while (length < dim && rng.uniform01() < cr);
  return u;
}

Genome crossover(Crossover scheme, std::span<const double> target,
                 std::span<const double> mutant, double cr, Rng& rng) {
  return scheme == Crossover::Binomial ? crossover_binomial(target, mutant, cr, rng)
                                       : crossover_exponential(target, mutant, cr, rng);
}

void clamp_to_bounds(Genome& g, double lower, double upper) noexcept {
  for (auto& v : g) v = std::clamp(v, lower, upper);
}

Individual select(const Individual& target, Genome trial_genome, double trial_fitness) {
  if (trial_fitness <= target.fitness) return {std::move(trial_genome), trial_fitness};
  return target;
}

Evolution::Evolution(VariantSpec spec, BenchmarkFn fn, ControlParams params, std::uint64_t seed)
    : spec_(spec), fn_(std::move(fn)), params_(params), seed_(seed), state_(seed) {
  params_.validate(spec_);
  state_.population = init_population(state_.rng, fn_, params_);
  state_.fe_count = params_.np;
  state_.best_ever = state_.population.best();
}

bool Evolution::done() const noexcept {
  if (state_.best_ever.fitness <= params_.tolerance) return true;
  if (state_.population.generation >= static_cast<std::size_t>(params_.max_gen)) return true;
  return state_.fe_count + params_.np > params_.max_fe;
}

void Evolution::step() {
  auto& rng = state_.rng;
  const Population& parents = state_.population;
  state_.scales = sample_f(rng, params_);

  Population next;
  next.members.reserve(parents.size());
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const auto& target = parents.members[i];
    Genome mutant = mutate(spec_, parents, i, state_.scales, rng);
    Genome trial = crossover(spec_.crossover, target.genome, mutant, params_.cr, rng);
    clamp_to_bounds(trial, fn_.lower, fn_.upper);
    const double fitness = evaluate(fn_, trial, rng);
    ++state_.fe_count;
    if (fitness < state_.best_ever.fitness) state_.best_ever = {trial, fitness};
    next.members.push_back(select(target, std::move(trial), fitness));
  }
  next.generation = parents.generation + 1;
  next.update_best();
  state_.population = std::move(next);
}

void Evolution::run_to_end(const Observer& observer) {
  auto notify = [&] {
    if (observer) {
      observer({state_.population.generation, state_.fe_count, state_.best_ever.fitness,
                &state_.population});
    }
  };
  notify();
  while (!done()) {
    step();
    notify();
  }
}

RunRecord Evolution::record() const {
  RunRecord r;
  r.variant = spec_;
  r.function = fn_.id;
  r.seed = seed_;
  r.cr = params_.cr;
  r.final_best = state_.best_ever.fitness;
  r.fe_used = state_.fe_count;
  r.success = r.final_best <= params_.tolerance;
  return r;
}

RunRecord run(const VariantSpec& spec, const BenchmarkFn& fn, const ControlParams& params,
              std::uint64_t seed, const Observer& observer) {
  Evolution evo(spec, fn, params, seed);
  evo.run_to_end(observer);
  return evo.record();
}

}  // namespace devolab::de
