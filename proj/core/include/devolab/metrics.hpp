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
#include <optional>
#include <span>
#include <vector>

#include "devolab/benchmarks.hpp"
#include "devolab/de.hpp"
#include "devolab/record.hpp"
#include "devolab/rng.hpp"
#include "devolab/variant.hpp"

namespace devolab::metrics {

/// Mean final best value. Throws UsageError on an empty list.
double mov(std::span<const RunRecord> records);

/// Mean of 100 * fe_used / max_fe over the runs, in percent.
double convergence_speed(std::span<const RunRecord> records, std::int64_t max_fe);

/// Q-measure bookkeeping for a group of runs.
///
/// c = sum_ej / nc, pc_percent = 100 * nc / total_runs, qm = c / pc_percent.
/// c and qm are empty when no run succeeded; reports print them as "-".
struct QmSummary {
  std::int64_t sum_ej = 0;
  std::int64_t nc = 0;
  std::int64_t total_runs = 0;
  std::optional<double> c;
  double pc_percent = 0.0;
  std::optional<double> qm;

  bool defined() const noexcept { return qm.has_value(); }
  /// Probability of convergence as a fraction in [0, 1]. Not used by reports.
  double pc_fraction() const noexcept { return pc_percent / 100.0; }
};

QmSummary summarize_qm(std::int64_t sum_ej, std::int64_t nc, std::int64_t total_runs);

/// Throws UsageError on an empty list.
QmSummary q_measure(std::span<const RunRecord> records);

/// Pools groups by adding their sum_ej, nc and total_runs.
QmSummary pool(std::span<const QmSummary> parts);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.95;

  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

inline constexpr int kDefaultResamples = 2000;
inline constexpr double kDefaultLevel = 0.95;

/// Percentile bootstrap interval for the mean of \p samples.
///
/// Draws \p resamples resamples with replacement, sorts their means and reads
/// the (1 - level) / 2 and (1 + level) / 2 quantiles with linear
/// interpolation between order statistics. Throws UsageError if samples is
/// empty, resamples < 100, or level is outside (0, 1).
ConfidenceInterval bootstrap_ci(std::span<const double> samples, int resamples, double level,
                                Rng& rng);

/// One grid point of a CR tuning sweep.
struct CrCell {
  double cr = 0.0;
  double mov = 0.0;
  ConfidenceInterval ci;
};

/// Picks the cell with the smallest CI midpoint; ties go to the narrower
/// interval, then to the smaller CR. Throws UsageError on an empty list.
const CrCell& choose_cr(std::span<const CrCell> cells);

std::vector<double> default_cr_grid();

struct TuneSettings {
  std::vector<double> grid = default_cr_grid();
  int runs_per_cr = 50;
  int resamples = kDefaultResamples;
  double level = kDefaultLevel;
  unsigned jobs = 1;
};

struct TuneResult {
  double cr = 0.0;
  std::vector<CrCell> cells;

  const CrCell& chosen() const;
};

/// Seed of run \p run of grid cell \p cell in a tuning sweep.
std::uint64_t tune_seed(std::uint64_t base_seed, const VariantSpec& variant, FunctionId fn,
                        std::size_t cell, std::uint64_t run);

/// Runs settings.runs_per_cr runs for every CR in the grid, bootstraps each
/// cell's MOV interval and returns the choose_cr() winner. params.cr is
/// ignored. Results do not depend on settings.jobs.
TuneResult tune_cr(const VariantSpec& variant, const BenchmarkFn& fn,
                   const TuneSettings& settings, de::ControlParams params,
                   std::uint64_t base_seed);

/// Tuned crossover rate for a variant-function pair from the built-in
/// CR table.
double cr_lookup(const VariantSpec& variant, FunctionId fn);

}  // namespace devolab::metrics
