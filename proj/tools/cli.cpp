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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "devolab/benchmarks.hpp"
#include "devolab/error.hpp"
#include "devolab/harness.hpp"
#include "devolab/metrics.hpp"
#include "devolab/report.hpp"
#include "devolab/variant.hpp"

namespace devolab::cli {

namespace {

namespace fs = std::filesystem;
using harness::ExperimentPlan;

struct Options {
  std::vector<std::string> variants;
  std::vector<std::string> functions;
  int runs = 0;
  std::uint64_t seed = 0;
  double cr = -1.0;
  std::string cr_map;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string map_out;
  std::string run_dir;
  std::string preset;
  std::string format = "markdown";
  std::string plan;
  int np = 60;
  int max_gen = 3000;
  bool tune = false;
  bool json = false;
  std::vector<double> grid = metrics::default_cr_grid();
  int resamples = metrics::kDefaultResamples;
  double level = metrics::kDefaultLevel;
};

std::vector<VariantSpec> parse_variants(const std::vector<std::string>& names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    return {all_variants().begin(), all_variants().end()};
  }
  std::vector<VariantSpec> out;
  for (const auto& n : names) out.push_back(VariantSpec::parse(n));
  return out;
}

std::vector<FunctionId> parse_functions(const std::vector<std::string>& names) {
  std::vector<FunctionId> out;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (int i = 1; i <= 14; ++i) out.push_back(static_cast<FunctionId>(i));
    return out;
  }
  for (const auto& n : names) out.push_back(parse_function(n));
  return out;
}

std::uint64_t resolve_seed(const Options& o, const Environment& env) {
  if (!env.seed_override) return o.seed;
  const std::string& text = *env.seed_override;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("DEVOLAB_SEED must be an unsigned integer, got '" + text + "'");
  }
  return v;
}

de::ControlParams control_params(const Options& o) {
  de::ControlParams p;
  p.np = o.np;
  p.max_gen = o.max_gen;
  p.max_fe = static_cast<std::int64_t>(o.np) * o.max_gen;
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// list ----------------------------------------------------------------------

int cmd_list(const Options& o, std::ostream& out) {
  const auto fns = catalog();
  if (o.json) {
    nlohmann::json j;
    j["variants"] = nlohmann::json::array();
    for (const auto& v : all_variants()) j["variants"].push_back(v.name());
    j["functions"] = nlohmann::json::array();
    for (const auto& fn : fns) {
      j["functions"].push_back({
          {"id", function_name(fn.id)},
          {"name", fn.name},
          {"dim", fn.dim},
          {"lower", fn.lower},
          {"upper", fn.upper},
          {"modality", fn.modality == Modality::Unimodal ? "unimodal" : "multimodal"},
          {"separable", fn.separable},
          {"class", std::string(class_label(fn.function_class()))},
          {"optimum_value", fn.optimum_value},
          {"optimizer", fn.optimizer},
      });
    }
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "Variants (" << all_variants().size() << "):\n";
  for (const auto& v : all_variants()) out << "  " << v.name() << "\n";
  out << "\nFunctions (" << fns.size() << ", dimension " << fns.front().dim << "):\n";
  for (const auto& fn : fns) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-4s %-24s [%g, %g]  %s\n", function_name(fn.id).c_str(),
                  fn.name.c_str(), fn.lower, fn.upper,
                  std::string(class_label(fn.function_class())).c_str());
    out << line;
  }
  out << "\nGroups:\n";
  for (auto cls : kAllClasses) {
    out << "  " << class_label(cls) << ":";
    for (const auto& fn : fns) {
      if (fn.function_class() == cls) out << " " << function_name(fn.id);
    }
    out << "\n";
  }
  return kOk;
}

// run -----------------------------------------------------------------------

ExperimentPlan plan_from_options(const Options& o, const CLI::App& sub, const Environment& env) {
  if (!o.plan.empty()) {
    for (const char* flag : {"--variant", "--function", "--runs", "--seed", "--cr", "--cr-map",
                             "--preset", "--np", "--max-gen", "--tune"}) {
      if (sub.count(flag) > 0) {
        throw ConfigError(std::string(flag) + " cannot be combined with --plan");
      }
    }
    return harness::parse_manifest(read_file(o.plan));
  }

  ExperimentPlan plan;
  plan.variants = parse_variants(o.variants);
  plan.functions = parse_functions(o.functions);
  plan.runs = o.preset == "desk" ? 10 : 100;
  if (sub.count("--runs") > 0) plan.runs = o.runs;
  plan.base_seed = resolve_seed(o, env);
  plan.params = control_params(o);

  if (o.tune) {
    plan.cr_source.kind = harness::CrSourceKind::Tuned;
    plan.cr_source.tune.grid = o.grid;
  } else if (!o.cr_map.empty() || sub.count("--cr") > 0) {
    plan.cr_source.kind = harness::CrSourceKind::Explicit;
    if (sub.count("--cr") > 0) plan.cr_source.uniform = o.cr;
    if (!o.cr_map.empty()) {
      std::ifstream in(o.cr_map);
      if (!in) throw ConfigError("cannot open CR map " + o.cr_map);
      plan.cr_source.map = harness::read_cr_map(in);
    }
  }
  plan.validate();
  return plan;
}

int cmd_run(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err,
            const Environment& env) {
  const ExperimentPlan plan = plan_from_options(o, sub, env);
  harness::ExecuteOptions options;
  options.jobs = o.jobs;
  options.out_dir = fs::path(o.out);
  if (env.stop != nullptr) options.should_stop = [stop = env.stop] { return stop->load(); };

  const auto store = harness::execute(plan, options);
  if (store.size() < plan.cell_count()) {
    err << "interrupted: " << store.size() << " of " << plan.cell_count()
        << " runs saved in " << o.out << "; rerun the same command to resume\n";
    return kInterrupted;
  }

  if (o.format == "csv") {
    out << read_file((fs::path(o.out) / "summary.csv").string());
  } else {
    out << report::render_markdown(store, plan);
  }
  err << "wrote " << store.size() << " runs to " << o.out << "\n";
  return kOk;
}

// tune-cr -------------------------------------------------------------------

int cmd_tune_cr(const Options& o, const CLI::App& sub, std::ostream& out, const Environment& env) {
  const auto variants = parse_variants(o.variants);
  const auto functions = parse_functions(o.functions);
  metrics::TuneSettings settings;
  settings.grid = o.grid;
  settings.runs_per_cr = sub.count("--runs") > 0 ? o.runs : 50;
  settings.resamples = o.resamples;
  settings.level = o.level;
  settings.jobs = o.jobs;
  const auto params = control_params(o);
  const auto seed = resolve_seed(o, env);
  for (const auto& v : variants) params.validate(v);

  std::ostringstream map;
  map << "variant,function,cr,ci_lo,ci_hi,mov\n";
  for (const auto& v : variants) {
    for (auto f : functions) {
      const auto result = metrics::tune_cr(v, make_function(f), settings, params, seed);
      const auto& c = result.chosen();
      map << v.name() << "," << function_name(f) << "," << harness::format_double(c.cr) << ","
          << harness::format_double(c.ci.lo) << "," << harness::format_double(c.ci.hi) << ","
          << harness::format_double(c.mov) << "\n";
      out << v.name() << " " << function_name(f) << ": CR=" << report::fixed2(c.cr) << " CI=["
          << c.ci.lo << ", " << c.ci.hi << "]\n";
    }
  }
  const fs::path path(o.map_out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << map.str();
  if (!file) throw StorageError("cannot write " + path.string());
  out << "wrote " << path.string() << "\n";
  return kOk;
}

// report --------------------------------------------------------------------

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const auto loaded = harness::load_run(o.run_dir);
  if (o.format == "csv") {
    auto rows = harness::aggregate(loaded.store, loaded.plan, harness::Grouping::PerCell).rows;
    auto cls = harness::aggregate(loaded.store, loaded.plan, harness::Grouping::PerFunctionClass).rows;
    rows.insert(rows.end(), cls.begin(), cls.end());
    harness::write_summary_csv(out, rows);
  } else {
    out << report::render_markdown(loaded.store, loaded.plan);
  }
  const auto missing = harness::aggregate(loaded.store, loaded.plan, harness::Grouping::PerCell).missing;
  if (!missing.empty()) {
    err << IncompleteStoreError(missing).what() << "\n";
    return kIncompleteStore;
  }
  return kOk;
}

void add_selection(CLI::App* sub, Options& o) {
  sub->add_option("--variant", o.variants, "Variant name, e.g. rand/1/bin (repeatable; default all)");
  sub->add_option("--function", o.functions, "Function f1..f14 (repeatable; default all)");
  sub->add_option("--seed", o.seed, "Base seed (DEVOLAB_SEED overrides)");
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--np", o.np, "Population size")->check(CLI::PositiveNumber);
  sub->add_option("--max-gen", o.max_gen, "Generations including the initial population")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Options o;
  CLI::App app{"Differential evolution variant laboratory", "devolab"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Show variants and benchmark functions");
  list->add_flag("--json", o.json, "Emit the catalog as JSON");

  auto* run_cmd = app.add_subcommand("run", "Execute an experiment plan");
  add_selection(run_cmd, o);
  run_cmd->add_option("--runs", o.runs, "Independent runs per cell")->check(CLI::PositiveNumber);
  run_cmd->add_option("--cr", o.cr, "Crossover rate for every cell")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--cr-map", o.cr_map, "CSV map variant,function,cr");
  run_cmd->add_flag("--tune", o.tune, "Tune CR per cell before running");
  run_cmd->add_option("--out", o.out, "Output directory")->default_val("devolab-out");
  run_cmd->add_option("--preset", o.preset, "desk (10 runs) or paper (100 runs)")
      ->check(CLI::IsMember({"desk", "paper"}));
  run_cmd->add_option("--format", o.format, "Summary printed to stdout")
      ->check(CLI::IsMember({"csv", "markdown"}));
  run_cmd->add_option("--plan", o.plan, "Replay a manifest.json");

  auto* tune = app.add_subcommand("tune-cr", "Choose CR per pair by bootstrap confidence intervals");
  add_selection(tune, o);
  tune->add_option("--runs", o.runs, "Runs per grid value (default 50)")->check(CLI::PositiveNumber);
  tune->add_option("--grid", o.grid, "CR grid (default 0.0 0.1 ... 1.0)");
  tune->add_option("--resamples", o.resamples, "Bootstrap resamples");
  tune->add_option("--level", o.level, "Confidence level");
  tune->add_option("--out", o.map_out, "CR map file")->default_val("cr_map.csv");

  auto* rep = app.add_subcommand("report", "Render tables from a finished run directory");
  rep->add_option("--out", o.run_dir, "Run directory")->default_val("devolab-out");
  rep->add_option("--format", o.format, "markdown or csv")->check(CLI::IsMember({"csv", "markdown"}));

  std::vector<std::string> storage{"devolab"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (*list) return cmd_list(o, out);
    if (*run_cmd) return cmd_run(o, *run_cmd, out, err, env);
    if (*tune) return cmd_tune_cr(o, *tune, out, env);
    if (*rep) return cmd_report(o, out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const UsageError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const IncompleteStoreError& e) {
    err << e.what() << "\n";
    return kIncompleteStore;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace devolab::cli
