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

#include "devolab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace devolab::report {

namespace {

constexpr const char* kUndefined = "−";

using harness::ExperimentPlan;
using harness::ResultStore;

std::string row_line(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s + "\n";
}

std::string separator(std::size_t n) {
  std::string s = "|";
  for (std::size_t i = 0; i < n; ++i) s += i == 0 ? " --- |" : " ---: |";
  return s + "\n";
}

std::vector<FunctionId> functions_in(const ExperimentPlan& plan, FunctionClass cls) {
  std::vector<FunctionId> out;
  for (auto f : plan.functions) {
    if (make_function(f, plan.dim, plan.step_form).function_class() == cls) out.push_back(f);
  }
  return out;
}

std::string count_or_dash(const metrics::QmSummary& s) {
  return s.nc > 0 ? std::to_string(s.sum_ej) : kUndefined;
}

void mov_tables(std::ostringstream& out, const ResultStore& store, const ExperimentPlan& plan) {
  for (auto cls : kAllClasses) {
    const auto fns = functions_in(plan, cls);
    if (fns.empty()) continue;
    out << "## MOV: " << class_label(cls) << " functions\n\n";
    std::vector<std::string> header{"Variant"};
    for (auto f : fns) header.push_back(function_name(f));
    out << row_line(header) << separator(header.size());
    for (const auto& v : plan.variants) {
      std::vector<std::string> cells{v.name()};
      for (auto f : fns) {
        const auto records = store.cell(v, f);
        cells.push_back(records.empty() ? "" : fixed2(metrics::mov(records)));
      }
      out << row_line(cells);
    }
    out << "\n";
  }
}

void cs_table(std::ostringstream& out, const ResultStore& store, const ExperimentPlan& plan) {
  out << "## Convergence speed (% of " << plan.params.max_fe
      << " evaluations; column minimum marked with *)\n\n";
  std::map<std::pair<std::size_t, std::size_t>, double> cs;
  std::vector<double> column_min(plan.functions.size(), std::numeric_limits<double>::infinity());
  for (std::size_t vi = 0; vi < plan.variants.size(); ++vi) {
    for (std::size_t fi = 0; fi < plan.functions.size(); ++fi) {
      const auto records = store.cell(plan.variants[vi], plan.functions[fi]);
      if (records.empty()) continue;
      // Compare at printed precision so equal-looking values star together.
      const double v = std::stod(fixed2(metrics::convergence_speed(records, plan.params.max_fe)));
      cs[{vi, fi}] = v;
      column_min[fi] = std::min(column_min[fi], v);
    }
  }
  std::vector<std::string> header{"Variant"};
  for (auto f : plan.functions) header.push_back(function_name(f));
  out << row_line(header) << separator(header.size());
  for (std::size_t vi = 0; vi < plan.variants.size(); ++vi) {
    std::vector<std::string> cells{plan.variants[vi].name()};
    for (std::size_t fi = 0; fi < plan.functions.size(); ++fi) {
      auto it = cs.find({vi, fi});
      if (it == cs.end()) {
        cells.emplace_back();
        continue;
      }
      cells.push_back(fixed2(it->second) + (it->second == column_min[fi] ? "*" : ""));
    }
    out << row_line(cells);
  }
  out << "\n";
}

void qm_tables(std::ostringstream& out, const ResultStore& store, const ExperimentPlan& plan) {
  const auto agg = harness::aggregate(store, plan, harness::Grouping::PerFunctionClass);
  for (auto cls : kAllClasses) {
    const auto fns = functions_in(plan, cls);
    if (fns.empty()) continue;
    out << "## Q-measure: " << class_label(cls) << " functions (ascending)\n\n";
    std::vector<std::string> header{"Variant"};
    for (auto f : fns) header.push_back(function_name(f));
    header.insert(header.end(), {"SumEj", "C", "Qm=C/Pc"});
    out << row_line(header) << separator(header.size());
    for (const auto& row : agg.rows) {
      if (row.function_class != cls) continue;
      std::vector<std::string> cells{row.variant.name()};
      for (auto f : fns) {
        auto it = std::find_if(row.parts.begin(), row.parts.end(),
                               [&](const auto& p) { return p.first == f; });
        cells.push_back(it == row.parts.end() ? "" : count_or_dash(it->second));
      }
      cells.push_back(count_or_dash(row.qm));
      cells.push_back(row.qm.c ? fixed2(*row.qm.c) : kUndefined);
      cells.push_back(row.qm.qm ? fixed2(*row.qm.qm) : kUndefined);
      out << row_line(cells);
    }
    out << "\n";
  }
}

}  // namespace

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_markdown(const ResultStore& store, const ExperimentPlan& plan) {
  std::ostringstream out;
  const auto& p = plan.params;
  out << "# DE variant report\n\n"
      << plan.runs << " runs per cell, NP=" << p.np << ", " << p.max_fe
      << " evaluations, F in [" << fixed2(p.f_low) << ", " << fixed2(p.f_high)
      << "], tolerance " << p.tolerance << ", base seed " << plan.base_seed << ".\n\n";

  const auto missing = harness::aggregate(store, plan, harness::Grouping::PerCell).missing;
  if (!missing.empty()) {
    out << "**Incomplete:** " << missing.size() << " cell(s) missing runs:";
    for (const auto& m : missing) out << " " << m << ";";
    out << "\n\n";
  }

  mov_tables(out, store, plan);
  cs_table(out, store, plan);
  qm_tables(out, store, plan);
  return out.str();
}

}  // namespace devolab::report
