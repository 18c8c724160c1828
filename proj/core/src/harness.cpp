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

#include "devolab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include "devolab/error.hpp"
#include "devolab/parallel.hpp"
#include "devolab/rng.hpp"

namespace devolab::harness {

namespace fs = std::filesystem;

std::string_view cr_source_name(CrSourceKind kind) noexcept {
  switch (kind) {
    case CrSourceKind::Table: return "table";
    case CrSourceKind::Explicit: return "explicit";
    case CrSourceKind::Tuned: return "tuned";
  }
  return "?";
}

namespace {

std::string pair_label(const VariantSpec& v, FunctionId f) {
  return v.name() + "@" + function_name(f);
}

void check_cr(double cr, const std::string& where) {
  if (!(cr >= 0.0 && cr <= 1.0)) {
    throw ConfigError("CR for " + where + " must lie in [0, 1], got " + format_double(cr));
  }
}

}  // namespace

void ExperimentPlan::validate() const {
  if (variants.empty()) throw ConfigError("plan has no variants");
  if (functions.empty()) throw ConfigError("plan has no functions");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (dim < 2) throw ConfigError("dimension must be at least 2");
  if (std::set(variants.begin(), variants.end()).size() != variants.size()) {
    throw ConfigError("plan lists a variant twice");
  }
  if (std::set(functions.begin(), functions.end()).size() != functions.size()) {
    throw ConfigError("plan lists a function twice");
  }
  for (const auto& v : variants) params.validate(v);
  if (cr_source.uniform) check_cr(*cr_source.uniform, "every pair");
  for (const auto& [key, cr] : cr_source.map) check_cr(cr, pair_label(key.variant, key.function));
}

CrMap ExperimentPlan::resolve_cr(unsigned jobs) const {
  validate();
  CrMap out;
  switch (cr_source.kind) {
    case CrSourceKind::Table:
      for (const auto& v : variants) {
        for (auto f : functions) out[{v, f}] = metrics::cr_lookup(v, f);
      }
      break;
    case CrSourceKind::Explicit: {
      std::vector<std::string> unresolved;
      for (const auto& v : variants) {
        for (auto f : functions) {
          if (auto it = cr_source.map.find({v, f}); it != cr_source.map.end()) {
            out[{v, f}] = it->second;
          } else if (cr_source.uniform) {
            out[{v, f}] = *cr_source.uniform;
          } else {
            unresolved.push_back(pair_label(v, f));
          }
        }
      }
      if (!unresolved.empty()) {
        std::string msg = "no CR given for:";
        for (const auto& u : unresolved) msg += " " + u;
        throw ConfigError(msg);
      }
      break;
    }
    case CrSourceKind::Tuned: {
      metrics::TuneSettings settings = cr_source.tune;
      settings.jobs = std::max(jobs, settings.jobs);
      for (const auto& v : variants) {
        for (auto f : functions) {
          const auto fn = make_function(f, dim, step_form);
          out[{v, f}] = metrics::tune_cr(v, fn, settings, params, base_seed).cr;
        }
      }
      break;
    }
  }
  return out;
}

std::string plan_fingerprint(const ExperimentPlan& plan, const CrMap& crs) {
  std::ostringstream s;
  const auto& p = plan.params;
  s << "np=" << p.np << ";max_gen=" << p.max_gen << ";max_fe=" << p.max_fe
    << ";f=" << format_double(p.f_low) << "," << format_double(p.f_high)
    << ";tol=" << format_double(p.tolerance) << ";k_equals_f=" << p.k_equals_f
    << ";runs=" << plan.runs << ";seed=" << plan.base_seed << ";dim=" << plan.dim
    << ";step=" << (plan.step_form == StepForm::Floor ? "floor" : "quadratic")
    << ";rng=" << Rng::kAlgorithm << ";cells=";
  for (const auto& v : plan.variants) {
    for (auto f : plan.functions) {
      auto it = crs.find({v, f});
      s << pair_label(v, f) << ":" << (it == crs.end() ? "?" : format_double(it->second)) << ";";
    }
  }
  const std::string text = s.str();
  char buf[17];
  auto h = fnv1a64(text);
  h = splitmix64(h ^ fnv1a64(std::string(text.rbegin(), text.rend())));
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ResultStore -------------------------------------------------------------------

void ResultStore::insert(const RunRecord& record) {
  const auto key = key_of(record);
  if (!records_.emplace(key, record).second) {
    throw StorageError("duplicate record for " + pair_label(key.variant, key.function) +
                       " run " + std::to_string(key.run_index));
  }
}

std::vector<RunRecord> ResultStore::records() const {
  std::vector<RunRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, r] : records_) out.push_back(r);
  return out;
}

std::vector<RunRecord> ResultStore::cell(const VariantSpec& variant, FunctionId fn) const {
  std::vector<RunRecord> out;
  auto it = records_.lower_bound({variant, fn, 0});
  for (; it != records_.end() && it->first.variant == variant && it->first.function == fn; ++it) {
    out.push_back(it->second);
  }
  return out;
}

// CSV ---------------------------------------------------------------------------

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw StorageError(std::string("malformed ") + what + " field '" + text + "'");
  }
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string runs_csv_row(const RunRecord& r) {
  return r.variant.name() + "," + function_name(r.function) + "," + std::to_string(r.run_index) +
         "," + std::to_string(r.seed) + "," + format_double(r.cr) + "," +
         format_double(r.final_best) + "," + std::to_string(r.fe_used) + "," +
         (r.success ? "true" : "false");
}

RunRecord parse_runs_csv_row(const std::string& line) {
  const auto fields = split_fields(strip_cr(line));
  if (fields.size() != 8) throw StorageError("runs.csv row needs 8 fields: '" + line + "'");
  RunRecord r;
  try {
    r.variant = VariantSpec::parse(fields[0]);
    r.function = parse_function(fields[1]);
  } catch (const ConfigError& e) {
    throw StorageError(e.what());
  }
  r.run_index = parse_number<std::uint64_t>(fields[2], "run_index");
  r.seed = parse_number<std::uint64_t>(fields[3], "seed");
  r.cr = parse_number<double>(fields[4], "cr");
  r.final_best = parse_number<double>(fields[5], "final_best");
  r.fe_used = parse_number<std::int64_t>(fields[6], "fe_used");
  if (fields[7] == "true" || fields[7] == "1") {
    r.success = true;
  } else if (fields[7] == "false" || fields[7] == "0") {
    r.success = false;
  } else {
    throw StorageError("malformed success field '" + fields[7] + "'");
  }
  return r;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRunsHeader << '\n';
  for (const auto& r : records) out << runs_csv_row(r) << '\n';
}

std::vector<RunRecord> read_runs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kRunsHeader) {
    throw StorageError("runs.csv header mismatch");
  }
  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    if (strip_cr(line).empty()) continue;
    out.push_back(parse_runs_csv_row(line));
  }
  return out;
}

CrMap read_cr_map(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CR map is empty");
  const auto header = split_fields(strip_cr(line));
  if (header.size() < 3 || header[0] != "variant" || header[1] != "function" ||
      header[2] != "cr") {
    throw ConfigError("CR map header must start with variant,function,cr");
  }
  CrMap map;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() < 3) throw ConfigError("CR map row needs 3 fields: '" + line + "'");
    PairKey key{VariantSpec::parse(fields[0]), parse_function(fields[1])};
    double cr = 0.0;
    try {
      cr = parse_number<double>(fields[2], "cr");
    } catch (const StorageError& e) {
      throw ConfigError(e.what());
    }
    check_cr(cr, pair_label(key.variant, key.function));
    if (!map.emplace(key, cr).second) {
      throw ConfigError("CR map lists " + pair_label(key.variant, key.function) + " twice");
    }
  }
  return map;
}

// Execution ---------------------------------------------------------------------

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file_atomically(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw StorageError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw StorageError("cannot replace " + path.string() + ": " + ec.message());
}

std::string runs_csv_text(const std::vector<RunRecord>& records) {
  std::ostringstream s;
  write_runs_csv(s, records);
  return s.str();
}

std::string summary_text(const ResultStore& store, const ExperimentPlan& plan) {
  std::vector<SummaryRow> rows = aggregate(store, plan, Grouping::PerCell).rows;
  auto classes = aggregate(store, plan, Grouping::PerFunctionClass).rows;
  rows.insert(rows.end(), classes.begin(), classes.end());
  std::ostringstream s;
  write_summary_csv(s, rows);
  return s.str();
}

// Records from an interrupted runs.csv. A torn final line is dropped.
std::vector<RunRecord> read_partial_runs(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  if (!std::getline(in, line)) return {};
  if (strip_cr(line) != kRunsHeader) throw StorageError(path.string() + ": header mismatch");
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!strip_cr(line).empty()) lines.push_back(line);
  }
  std::vector<RunRecord> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(parse_runs_csv_row(lines[i]));
    } catch (const StorageError&) {
      if (i + 1 != lines.size()) throw;
    }
  }
  return out;
}

}  // namespace

ResultStore execute(const ExperimentPlan& plan, const ExecuteOptions& options) {
  const CrMap crs = plan.resolve_cr(options.jobs);
  ResultStore store(plan_fingerprint(plan, crs));

  std::ofstream runs_out;
  fs::path runs_path;
  if (options.out_dir) {
    const fs::path& dir = *options.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw StorageError("cannot create " + dir.string() + ": " + ec.message());
    runs_path = dir / "runs.csv";
    const fs::path manifest_path = dir / "manifest.json";

    if (fs::exists(runs_path)) {
      if (!fs::exists(manifest_path)) {
        throw ConfigError(dir.string() + " holds runs.csv without a manifest");
      }
      std::ifstream in(manifest_path);
      std::stringstream text;
      text << in.rdbuf();
      const ExperimentPlan previous = parse_manifest(text.str());
      if (plan_fingerprint(previous, previous.cr_source.map) != store.fingerprint()) {
        throw ConfigError(dir.string() + " holds results of a different plan");
      }
      for (const auto& r : read_partial_runs(runs_path)) {
        if (r.run_index >= static_cast<std::uint64_t>(plan.runs)) {
          throw StorageError("runs.csv holds a run outside the plan");
        }
        store.insert(r);
      }
    }
    write_file_atomically(manifest_path, manifest_json(plan, crs, utc_now()));
    write_file_atomically(runs_path, runs_csv_text(store.records()));
    runs_out.open(runs_path, std::ios::binary | std::ios::app);
    if (!runs_out) throw StorageError("cannot append to " + runs_path.string());
  }

  std::vector<RunKey> todo;
  for (const auto& v : plan.variants) {
    for (auto f : plan.functions) {
      for (int r = 0; r < plan.runs; ++r) {
        RunKey key{v, f, static_cast<std::uint64_t>(r)};
        if (!store.contains(key)) todo.push_back(key);
      }
    }
  }

  std::vector<BenchmarkFn> fns;
  for (auto f : plan.functions) fns.push_back(make_function(f, plan.dim, plan.step_form));
  auto fn_of = [&](FunctionId id) -> const BenchmarkFn& {
    return *std::find_if(fns.begin(), fns.end(), [&](const auto& fn) { return fn.id == id; });
  };

  std::mutex store_mutex;
  parallel_for(todo.size(), options.jobs, [&](std::size_t i) {
    if (options.should_stop && options.should_stop()) return;
    const RunKey& key = todo[i];
    de::ControlParams params = plan.params;
    params.cr = crs.at({key.variant, key.function});
    const std::uint64_t seed =
        derive_seed(plan.base_seed, key.variant.name(), function_number(key.function), key.run_index);
    RunRecord r = de::run(key.variant, fn_of(key.function), params, seed);
    r.run_index = key.run_index;

    std::lock_guard lock(store_mutex);
    store.insert(r);
    if (runs_out.is_open()) {
      runs_out << runs_csv_row(r) << '\n';
      runs_out.flush();
      if (!runs_out) throw StorageError("write to " + runs_path.string() + " failed");
    }
  });

  if (options.out_dir && store.size() == plan.cell_count()) {
    runs_out.close();
    write_file_atomically(runs_path, runs_csv_text(store.records()));
    write_file_atomically(*options.out_dir / "summary.csv", summary_text(store, plan));
  }
  return store;
}

LoadedRun load_run(const fs::path& dir) {
  std::ifstream manifest(dir / "manifest.json");
  if (!manifest) throw StorageError("cannot read " + (dir / "manifest.json").string());
  std::stringstream text;
  text << manifest.rdbuf();
  LoadedRun out{parse_manifest(text.str()), {}, {}};
  out.crs = out.plan.cr_source.map;
  out.store = ResultStore(plan_fingerprint(out.plan, out.crs));

  std::ifstream runs(dir / "runs.csv");
  if (!runs) throw StorageError("cannot read " + (dir / "runs.csv").string());
  for (const auto& r : read_runs_csv(runs)) out.store.insert(r);
  return out;
}

// Aggregation -------------------------------------------------------------------

void Aggregation::require_complete() const {
  if (!missing.empty()) throw IncompleteStoreError(missing);
}

Aggregation aggregate(const ResultStore& store, const ExperimentPlan& plan, Grouping grouping) {
  Aggregation out;
  const auto expected = static_cast<std::size_t>(plan.runs);
  for (const auto& v : plan.variants) {
    for (auto f : plan.functions) {
      const auto n = store.cell(v, f).size();
      if (n < expected) {
        out.missing.push_back(v.name() + "/" + function_name(f) + " (" + std::to_string(n) +
                              " of " + std::to_string(expected) + " runs)");
      }
    }
  }

  if (grouping == Grouping::PerCell) {
    for (const auto& v : plan.variants) {
      for (auto f : plan.functions) {
        const auto records = store.cell(v, f);
        if (records.empty()) continue;
        SummaryRow row;
        row.scope = Grouping::PerCell;
        row.variant = v;
        row.function = f;
        row.mov = metrics::mov(records);
        row.cs_percent = metrics::convergence_speed(records, plan.params.max_fe);
        row.qm = metrics::q_measure(records);
        out.rows.push_back(std::move(row));
      }
    }
    return out;
  }

  for (auto cls : kAllClasses) {
    std::vector<FunctionId> members;
    for (auto f : plan.functions) {
      if (make_function(f, plan.dim, plan.step_form).function_class() == cls) members.push_back(f);
    }
    if (members.empty()) continue;

    std::vector<SummaryRow> rows;
    for (const auto& v : plan.variants) {
      SummaryRow row;
      row.scope = Grouping::PerFunctionClass;
      row.variant = v;
      row.function_class = cls;
      std::vector<metrics::QmSummary> parts;
      for (auto f : members) {
        const auto records = store.cell(v, f);
        if (records.empty()) continue;
        parts.push_back(metrics::q_measure(records));
        row.parts.emplace_back(f, parts.back());
      }
      if (parts.empty()) continue;
      row.qm = metrics::pool(parts);
      rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
      if (a.qm.defined() != b.qm.defined()) return a.qm.defined();
      return a.qm.defined() && *a.qm.qm < *b.qm.qm;
    });
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string summary_csv_row(const SummaryRow& row) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  std::string where = row.function ? function_name(*row.function)
                                   : std::string(class_key(row.function_class.value()));
  return std::string(row.scope == Grouping::PerCell ? "cell" : "class") + "," +
         row.variant.name() + "," + where + "," + opt(row.mov) + "," + opt(row.cs_percent) + "," +
         std::to_string(row.qm.sum_ej) + "," + std::to_string(row.qm.nc) + "," + opt(row.qm.c) +
         "," + format_double(row.qm.pc_percent) + "," + opt(row.qm.qm);
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) out << summary_csv_row(r) << '\n';
}

}  // namespace devolab::harness
