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

#include "devolab/benchmarks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "devolab/error.hpp"

namespace devolab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Entry {
  FunctionId id;
  const char* name;
  double lower;
  double upper;
  Modality modality;
  bool separable;
  double optimizer;
};

// clang-format off
constexpr Entry kEntries[] = {
    {FunctionId::f1,  "sphere",                 -100.0, 100.0, Modality::Unimodal,   true,  0.0},
    {FunctionId::f2,  "schwefel 2.22",           -10.0,  10.0, Modality::Unimodal,   true,  0.0},
    {FunctionId::f3,  "schwefel 1.2",           -100.0, 100.0, Modality::Unimodal,   false, 0.0},
    {FunctionId::f4,  "schwefel 2.21",          -100.0, 100.0, Modality::Unimodal,   true,  0.0},
    {FunctionId::f5,  "rosenbrock",              -30.0,  30.0, Modality::Multimodal, false, 1.0},
    {FunctionId::f6,  "step",                   -100.0, 100.0, Modality::Unimodal,   true,  0.0},
    {FunctionId::f7,  "quartic with noise",       -1.28,  1.28, Modality::Unimodal,   true,  0.0},
    {FunctionId::f8,  "schwefel 2.26",          -500.0, 500.0, Modality::Multimodal, true,  420.9687},
    {FunctionId::f9,  "rastrigin",                -5.12,  5.12, Modality::Multimodal, true,  0.0},
    {FunctionId::f10, "ackley",                  -30.0,  30.0, Modality::Multimodal, false, 0.0},
    {FunctionId::f11, "griewank",               -600.0, 600.0, Modality::Multimodal, false, 0.0},
    {FunctionId::f12, "generalized penalized 1", -50.0,  50.0, Modality::Multimodal, false, -1.0},
    {FunctionId::f13, "generalized penalized 2", -50.0,  50.0, Modality::Multimodal, false, 1.0},
    {FunctionId::f14, "bohachevsky",            -100.0, 100.0, Modality::Multimodal, true,  0.0},
};
// clang-format on

double sq(double v) { return v * v; }

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_222(std::span<const double> x) {
  double sum = 0.0;
  double prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_12(std::span<const double> x) {
  double s = 0.0;
  double partial = 0.0;
  for (double v : x) {
    partial += v;
    s += partial * partial;
  }
  return s;
}

double schwefel_221(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  }
  return s;
}

double step(std::span<const double> x, StepForm form) {
  double s = 0.0;
  for (double v : x) s += form == StepForm::Floor ? sq(std::floor(v + 0.5)) : sq(v + 0.5);
  return s;
}

double quartic(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * sq(sq(x[i]));
  return s;
}

double schwefel_226(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s + kSchwefelOffset;
}

// 1 - cos(t) form keeps every term >= 0 in floating point.
double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v + 10.0 * (1.0 - std::cos(2.0 * kPi * v));
  return s;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sum_sq = 0.0;
  double sum_cos = 0.0;
  for (double v : x) {
    sum_sq += v * v;
    sum_cos += std::cos(2.0 * kPi * v);
  }
  return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sum_sq / n))) +
         (std::numbers::e - std::exp(sum_cos / n));
}

double griewank(std::span<const double> x) {
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 + (1.0 - prod);
}

double penalty_sum(std::span<const double> x) {
  const PenaltyParams p{10.0, 100.0, 4.0};
  double s = 0.0;
  for (double v : x) s += penalty_u(v, p);
  return s;
}

double penalized_1(std::span<const double> x) {
  const std::size_t n = x.size();
  double s = 10.0 * sq(std::sin(kPi * y_transform(x[0])));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double yi = y_transform(x[i]);
    const double yn = y_transform(x[i + 1]);
    s += sq(yi - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * yn)));
  }
  s += sq(y_transform(x[n - 1]) - 1.0);
  return kPi / static_cast<double>(n) * s + penalty_sum(x);
}

double penalized_2(std::span<const double> x) {
  const std::size_t n = x.size();
  double s = sq(std::sin(3.0 * kPi * x[0]));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * kPi * x[i + 1])));
  }
  s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * kPi * x[n - 1])));
  return 0.1 * s + penalty_sum(x);
}

// Generalized over consecutive pairs; 0.3(1 - cos) + 0.4(1 - cos) is the
// usual "- 0.3cos - 0.4cos + 0.7" rearranged to stay >= 0.
double bohachevsky(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] + 0.3 * (1.0 - std::cos(3.0 * kPi * x[i])) +
         0.4 * (1.0 - std::cos(4.0 * kPi * x[i + 1]));
  }
  return s;
}

void check_dim(const BenchmarkFn& fn, std::span<const double> x) {
  if (static_cast<int>(x.size()) != fn.dim) {
    throw ConfigError(function_name(fn.id) + " expects " + std::to_string(fn.dim) +
                      " coordinates, got " + std::to_string(x.size()));
  }
}

}  // namespace

std::string function_name(FunctionId id) { return "f" + std::to_string(function_number(id)); }

FunctionId parse_function(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    int n = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc{} && ptr == last && n >= 1 && n <= 14) return static_cast<FunctionId>(n);
  }
  std::string msg = "unknown function '" + std::string(text) + "'; valid functions:";
  for (int i = 1; i <= 14; ++i) msg += " f" + std::to_string(i);
  throw ConfigError(msg);
}

std::string_view class_label(FunctionClass c) noexcept {
  switch (c) {
    case FunctionClass::UnimodalSeparable: return "unimodal separable";
    case FunctionClass::UnimodalNonseparable: return "unimodal nonseparable";
    case FunctionClass::MultimodalSeparable: return "multimodal separable";
    case FunctionClass::MultimodalNonseparable: return "multimodal nonseparable";
  }
  return "?";
}

std::string_view class_key(FunctionClass c) noexcept {
  switch (c) {
    case FunctionClass::UnimodalSeparable: return "unimodal-separable";
    case FunctionClass::UnimodalNonseparable: return "unimodal-nonseparable";
    case FunctionClass::MultimodalSeparable: return "multimodal-separable";
    case FunctionClass::MultimodalNonseparable: return "multimodal-nonseparable";
  }
  return "?";
}

FunctionClass parse_class_key(std::string_view key) {
  for (auto c : kAllClasses) {
    if (class_key(c) == key) return c;
  }
  throw ConfigError("unknown function class '" + std::string(key) + "'");
}

FunctionClass BenchmarkFn::function_class() const noexcept {
  if (modality == Modality::Unimodal) {
    return separable ? FunctionClass::UnimodalSeparable : FunctionClass::UnimodalNonseparable;
  }
  return separable ? FunctionClass::MultimodalSeparable : FunctionClass::MultimodalNonseparable;
}

BenchmarkFn make_function(FunctionId id, int dim, StepForm step_form) {
  if (dim < 2) throw ConfigError("benchmark dimension must be at least 2");
  const int n = function_number(id);
  if (n < 1 || n > 14) throw ConfigError("function id out of range");
  const Entry& e = kEntries[n - 1];
  BenchmarkFn fn;
  fn.id = id;
  fn.name = e.name;
  fn.dim = dim;
  fn.lower = e.lower;
  fn.upper = e.upper;
  fn.modality = e.modality;
  fn.separable = e.separable;
  fn.optimizer = e.optimizer;
  fn.step_form = step_form;
  if (id == FunctionId::f6 && step_form == StepForm::Quadratic) {
    fn.lower = -1.28;
    fn.upper = 1.28;
    fn.optimizer = -0.5;
  }
  return fn;
}

std::vector<BenchmarkFn> catalog(int dim, StepForm step_form) {
  std::vector<BenchmarkFn> out;
  out.reserve(14);
  for (int i = 1; i <= 14; ++i) out.push_back(make_function(static_cast<FunctionId>(i), dim, step_form));
  return out;
}

double penalty_u(double x, const PenaltyParams& p) noexcept {
  if (x > p.a) return p.k * std::pow(x - p.a, p.m);
  if (x < -p.a) return p.k * std::pow(-x - p.a, p.m);
  return 0.0;
}

double evaluate_noiseless(const BenchmarkFn& fn, std::span<const double> x) {
  check_dim(fn, x);
  switch (fn.id) {
    case FunctionId::f1: return sphere(x);
    case FunctionId::f2: return schwefel_222(x);
    case FunctionId::f3: return schwefel_12(x);
    case FunctionId::f4: return schwefel_221(x);
    case FunctionId::f5: return rosenbrock(x);
    case FunctionId::f6: return step(x, fn.step_form);
    case FunctionId::f7: return quartic(x);
    case FunctionId::f8: return schwefel_226(x);
    case FunctionId::f9: return rastrigin(x);
    case FunctionId::f10: return ackley(x);
    case FunctionId::f11: return griewank(x);
    case FunctionId::f12: return penalized_1(x);
    case FunctionId::f13: return penalized_2(x);
    case FunctionId::f14: return bohachevsky(x);
  }
  throw ConfigError("function id out of range");
}

double evaluate(const BenchmarkFn& fn, std::span<const double> x, Rng& noise) {
  const double value = evaluate_noiseless(fn, x);
  return fn.noisy() ? value + noise.uniform01() : value;
}

}  // namespace devolab
