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

#include <json.hpp>

#include "devolab/error.hpp"
#include "devolab/harness.hpp"

namespace devolab::harness {

using nlohmann::json;

namespace {
constexpr const char* kFormat = "devolab-manifest/1";
}  // namespace

std::string manifest_json(const ExperimentPlan& plan, const CrMap& crs,
                          const std::string& created_utc) {
  const auto& p = plan.params;
  json j;
  j["format"] = kFormat;
  j["created_utc"] = created_utc;
  j["fingerprint"] = plan_fingerprint(plan, crs);
  j["rng"] = {
      {"algorithm", std::string(Rng::kAlgorithm)},
      {"seed_derivation",
       "h=0; for w in [base_seed, fnv1a64(variant), function_number, run_index]: "
       "h = splitmix64(h ^ w)"},
  };
  j["base_seed"] = plan.base_seed;
  j["runs"] = plan.runs;
  j["dim"] = plan.dim;
  j["step_form"] = plan.step_form == StepForm::Floor ? "floor" : "quadratic";
  j["params"] = {
      {"np", p.np},
      {"max_gen", p.max_gen},
      {"max_fe", p.max_fe},
      {"f_low", p.f_low},
      {"f_high", p.f_high},
      {"tolerance", p.tolerance},
      {"k_equals_f", p.k_equals_f},
  };
  json variants = json::array();
  for (const auto& v : plan.variants) variants.push_back(v.name());
  j["variants"] = variants;
  json functions = json::array();
  for (auto f : plan.functions) functions.push_back(function_name(f));
  j["functions"] = functions;

  json source = {{"kind", std::string(cr_source_name(plan.cr_source.kind))}};
  if (plan.cr_source.uniform) source["uniform"] = *plan.cr_source.uniform;
  if (plan.cr_source.kind == CrSourceKind::Tuned) {
    const auto& t = plan.cr_source.tune;
    source["tune"] = {{"grid", t.grid},
                      {"runs_per_cr", t.runs_per_cr},
                      {"resamples", t.resamples},
                      {"level", t.level}};
  }
  j["cr_source"] = source;

  json cells = json::array();
  for (const auto& [key, cr] : crs) {
    cells.push_back({{"variant", key.variant.name()},
                     {"function", function_name(key.function)},
                     {"cr", cr}});
  }
  j["cr"] = cells;
  return j.dump(2) + "\n";
}

ExperimentPlan parse_manifest(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kFormat) {
      throw ConfigError("unsupported manifest format");
    }
    if (j.at("rng").at("algorithm").get<std::string>() != Rng::kAlgorithm) {
      throw ConfigError("manifest was written with a different RNG");
    }
    ExperimentPlan plan;
    plan.base_seed = j.at("base_seed").get<std::uint64_t>();
    plan.runs = j.at("runs").get<int>();
    plan.dim = j.at("dim").get<int>();
    plan.step_form =
        j.at("step_form").get<std::string>() == "quadratic" ? StepForm::Quadratic : StepForm::Floor;
    const auto& p = j.at("params");
    plan.params.np = p.at("np").get<int>();
    plan.params.max_gen = p.at("max_gen").get<int>();
    plan.params.max_fe = p.at("max_fe").get<std::int64_t>();
    plan.params.f_low = p.at("f_low").get<double>();
    plan.params.f_high = p.at("f_high").get<double>();
    plan.params.tolerance = p.at("tolerance").get<double>();
    plan.params.k_equals_f = p.at("k_equals_f").get<bool>();
    for (const auto& v : j.at("variants")) plan.variants.push_back(VariantSpec::parse(v.get<std::string>()));
    for (const auto& f : j.at("functions")) plan.functions.push_back(parse_function(f.get<std::string>()));

    plan.cr_source.kind = CrSourceKind::Explicit;
    for (const auto& c : j.at("cr")) {
      PairKey key{VariantSpec::parse(c.at("variant").get<std::string>()),
                  parse_function(c.at("function").get<std::string>())};
      plan.cr_source.map[key] = c.at("cr").get<double>();
    }
    plan.validate();
    return plan;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed manifest: ") + e.what());
  }
}

}  // namespace devolab::harness
