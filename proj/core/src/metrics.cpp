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

#include "devolab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "devolab/error.hpp"
#include "devolab/parallel.hpp"

namespace devolab::metrics {

namespace {

void require_nonempty(std::span<const RunRecord> records, const char* what) {
  if (records.empty()) throw UsageError(std::string(what) + " of an empty record list");
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

constexpr std::uint64_t kBootstrapStream = 0x626f6f74;  // "boot"

}  // namespace

double mov(std::span<const RunRecord> records) {
  require_nonempty(records, "MOV");
  double sum = 0.0;
  for (const auto& r : records) sum += r.final_best;
  return sum / static_cast<double>(records.size());
}

double convergence_speed(std::span<const RunRecord> records, std::int64_t max_fe) {
  require_nonempty(records, "convergence speed");
  if (max_fe <= 0) throw UsageError("max_fe must be positive");
  double sum = 0.0;
  for (const auto& r : records) {
    sum += 100.0 * static_cast<double>(r.fe_used) / static_cast<double>(max_fe);
  }
  return sum / static_cast<double>(records.size());
}

QmSummary summarize_qm(std::int64_t sum_ej, std::int64_t nc, std::int64_t total_runs) {
  if (nc < 0 || total_runs < 0 || nc > total_runs) {
    throw UsageError("successful runs must lie between 0 and the total run count");
  }
  QmSummary s;
  s.sum_ej = sum_ej;
  s.nc = nc;
  s.total_runs = total_runs;
  s.pc_percent = total_runs > 0 ? 100.0 * static_cast<double>(nc) / static_cast<double>(total_runs)
                                : 0.0;
  if (nc > 0) {
    s.c = static_cast<double>(sum_ej) / static_cast<double>(nc);
    s.qm = *s.c / s.pc_percent;
  }
  return s;
}

QmSummary q_measure(std::span<const RunRecord> records) {
  require_nonempty(records, "Q-measure");
  std::int64_t sum_ej = 0;
  std::int64_t nc = 0;
  for (const auto& r : records) {
    if (r.success) {
      sum_ej += r.fe_used;
      ++nc;
    }
  }
  return summarize_qm(sum_ej, nc, static_cast<std::int64_t>(records.size()));
}

QmSummary pool(std::span<const QmSummary> parts) {
  std::int64_t sum_ej = 0;
  std::int64_t nc = 0;
  std::int64_t total = 0;
  for (const auto& p : parts) {
    sum_ej += p.sum_ej;
    nc += p.nc;
    total += p.total_runs;
  }
  return summarize_qm(sum_ej, nc, total);
}

ConfidenceInterval bootstrap_ci(std::span<const double> samples, int resamples, double level,
                                Rng& rng) {
  if (samples.empty()) throw UsageError("bootstrap of an empty sample");
  if (resamples < 100) throw UsageError("bootstrap needs at least 100 resamples");
  if (!(level > 0.0 && level < 1.0)) throw UsageError("confidence level must lie in (0, 1)");

  const std::size_t n = samples.size();
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& m : means) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += samples[rng.below(n)];
    m = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  return {quantile_sorted(means, (1.0 - level) / 2.0), quantile_sorted(means, (1.0 + level) / 2.0),
          level};
}

const CrCell& choose_cr(std::span<const CrCell> cells) {
  if (cells.empty()) throw UsageError("no CR cells to choose from");
  const CrCell* best = &cells[0];
  for (const auto& c : cells.subspan(1)) {
    const double mid = c.ci.midpoint();
    const double best_mid = best->ci.midpoint();
    if (mid < best_mid ||
        (mid == best_mid && (c.ci.width() < best->ci.width() ||
                             (c.ci.width() == best->ci.width() && c.cr < best->cr)))) {
      best = &c;
    }
  }
  return *best;
}

std::vector<double> default_cr_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

const CrCell& TuneResult::chosen() const {
  for (const auto& c : cells) {
    if (c.cr == cr) return c;
  }
  throw UsageError("tuning result holds no cell for its chosen CR");
}

std::uint64_t tune_seed(std::uint64_t base_seed, const VariantSpec& variant, FunctionId fn,
                        std::size_t cell, std::uint64_t run) {
  return mix_seed({base_seed, fnv1a64(variant.name()),
                   static_cast<std::uint64_t>(function_number(fn)), cell, run,
                   fnv1a64("tune-cr")});
}

TuneResult tune_cr(const VariantSpec& variant, const BenchmarkFn& fn,
                   const TuneSettings& settings, de::ControlParams params,
                   std::uint64_t base_seed) {
  if (settings.grid.empty()) throw UsageError("CR grid is empty");
  if (settings.runs_per_cr < 2) throw UsageError("CR tuning needs at least 2 runs per cell");
  for (double cr : settings.grid) {
    params.cr = cr;
    params.validate(variant);
  }

  const std::size_t cells = settings.grid.size();
  const auto runs = static_cast<std::size_t>(settings.runs_per_cr);
  std::vector<double> finals(cells * runs);
  parallel_for(cells * runs, settings.jobs, [&](std::size_t job) {
    const std::size_t cell = job / runs;
    const std::size_t r = job % runs;
    de::ControlParams p = params;
    p.cr = settings.grid[cell];
    finals[job] = de::run(variant, fn, p, tune_seed(base_seed, variant, fn.id, cell, r)).final_best;
  });

  TuneResult result;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::span<const double> sample(finals.data() + cell * runs, runs);
    Rng rng(mix_seed({base_seed, fnv1a64(variant.name()),
                      static_cast<std::uint64_t>(function_number(fn.id)), cell, kBootstrapStream}));
    CrCell c;
    c.cr = settings.grid[cell];
    double sum = 0.0;
    for (double v : sample) sum += v;
    c.mov = sum / static_cast<double>(runs);
    c.ci = bootstrap_ci(sample, settings.resamples, settings.level, rng);
    result.cells.push_back(c);
  }
  result.cr = choose_cr(result.cells).cr;
  return result;
}

}  // namespace devolab::metrics
