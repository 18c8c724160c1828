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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "devolab/benchmarks.hpp"
#include "devolab/de.hpp"
#include "devolab/metrics.hpp"
#include "devolab/record.hpp"
#include "devolab/variant.hpp"

namespace devolab::harness {

struct PairKey {
  VariantSpec variant;
  FunctionId function = FunctionId::f1;

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

using CrMap = std::map<PairKey, double>;

enum class CrSourceKind { Table, Explicit, Tuned };

std::string_view cr_source_name(CrSourceKind kind) noexcept;

/// Where each cell's crossover rate comes from. With Explicit, \c uniform
/// (when set) covers every pair and \c map must otherwise cover each one.
struct CrSource {
  CrSourceKind kind = CrSourceKind::Table;
  std::optional<double> uniform;
  CrMap map;
  metrics::TuneSettings tune;
};

struct ExperimentPlan {
  std::vector<VariantSpec> variants;
  std::vector<FunctionId> functions;
  int runs = 100;
  de::ControlParams params;
  CrSource cr_source;
  std::uint64_t base_seed = 0;
  int dim = 30;
  StepForm step_form = StepForm::Floor;

  /// Throws ConfigError. Does not run any tuning.
  void validate() const;

  /// CR for every (variant, function) pair. Tuned sources run their sweeps
  /// here on \p jobs threads. Throws ConfigError for unresolvable pairs or
  /// values outside [0, 1].
  CrMap resolve_cr(unsigned jobs = 1) const;

  std::size_t cell_count() const noexcept {
    return variants.size() * functions.size() * static_cast<std::size_t>(runs);
  }
};

/// Stable hash of everything that determines numeric results: control
/// parameters, the cell grid, base seed, resolved CRs and the RNG name.
std::string plan_fingerprint(const ExperimentPlan& plan, const CrMap& crs);

struct RunKey {
  VariantSpec variant;
  FunctionId function = FunctionId::f1;
  std::uint64_t run_index = 0;

  friend auto operator<=>(const RunKey&, const RunKey&) = default;
};

inline RunKey key_of(const RunRecord& r) { return {r.variant, r.function, r.run_index}; }

/// Append-only record collection keyed by (variant, function, run index).
class ResultStore {
 public:
  ResultStore() = default;
  explicit ResultStore(std::string fingerprint) : fingerprint_(std::move(fingerprint)) {}

  /// Throws StorageError on a duplicate key.
  void insert(const RunRecord& record);
  bool contains(const RunKey& key) const { return records_.contains(key); }
  std::size_t size() const noexcept { return records_.size(); }

  /// Records in key order.
  std::vector<RunRecord> records() const;
  std::vector<RunRecord> cell(const VariantSpec& variant, FunctionId fn) const;

  const std::string& fingerprint() const noexcept { return fingerprint_; }

 private:
  std::string fingerprint_;
  std::map<RunKey, RunRecord> records_;
};

struct ExecuteOptions {
  unsigned jobs = 1;
  /// When set, runs.csv, summary.csv and manifest.json go here. An existing
  /// runs.csv for the same plan fingerprint is resumed; completed cells are
  /// not re-run.
  std::optional<std::filesystem::path> out_dir;
  /// Polled before each run starts; returning true abandons the rest.
  std::function<bool()> should_stop;
};

/// Runs every missing cell of \p plan. Seeds come from derive_seed(base_seed,
/// variant name, function number, run index). Records are appended to
/// runs.csv as they finish; once all cells are present the file is rewritten
/// in key order so its bytes do not depend on scheduling.
ResultStore execute(const ExperimentPlan& plan, const ExecuteOptions& options = {});

/// Reads a directory written by execute().
struct LoadedRun {
  ExperimentPlan plan;
  CrMap crs;
  ResultStore store;
};
LoadedRun load_run(const std::filesystem::path& dir);

// Persistence ----------------------------------------------------------------

inline constexpr const char* kRunsHeader =
    "variant,function,run_index,seed,cr,final_best,fe_used,success";
inline constexpr const char* kSummaryHeader =
    "scope,variant,function_or_class,mov,cs_percent,sum_ej,nc,c,pc_percent,qm";

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

std::string runs_csv_row(const RunRecord& r);
RunRecord parse_runs_csv_row(const std::string& line);
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_runs_csv(std::istream& in);

/// CR map file: header "variant,function,cr" optionally followed by more
/// columns, which the reader ignores.
CrMap read_cr_map(std::istream& in);

std::string manifest_json(const ExperimentPlan& plan, const CrMap& crs,
                          const std::string& created_utc);
/// Plan with an Explicit CR source holding the recorded CRs.
ExperimentPlan parse_manifest(const std::string& text);

// Aggregation -----------------------------------------------------------------

enum class Grouping { PerCell, PerFunctionClass };

struct SummaryRow {
  Grouping scope = Grouping::PerCell;
  VariantSpec variant;
  std::optional<FunctionId> function;
  std::optional<FunctionClass> function_class;
  std::optional<double> mov;
  std::optional<double> cs_percent;
  metrics::QmSummary qm;
  /// Per-function summaries behind a class row, in plan order.
  std::vector<std::pair<FunctionId, metrics::QmSummary>> parts;
};

struct Aggregation {
  std::vector<SummaryRow> rows;
  /// "variant/function" labels of cells with fewer records than plan.runs.
  std::vector<std::string> missing;

  /// Throws IncompleteStoreError when anything is missing.
  void require_complete() const;
};

/// PerCell: MOV, Cs and Q-measure for each (variant, function) in plan
/// order. PerFunctionClass: for each class touched by the plan, one row per
/// variant pooling all runs of the class's functions, sorted ascending by Qm
/// with undefined rows last. Cells with no records are skipped and listed
/// in \c missing.
Aggregation aggregate(const ResultStore& store, const ExperimentPlan& plan, Grouping grouping);

std::string summary_csv_row(const SummaryRow& row);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace devolab::harness
