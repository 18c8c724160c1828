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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "devolab/rng.hpp"

namespace devolab {

enum class FunctionId {
  f1 = 1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11, f12, f13, f14,
};

constexpr int function_number(FunctionId id) noexcept { return static_cast<int>(id); }

/// "f1" .. "f14".
std::string function_name(FunctionId id);

/// Accepts "f1".."f14" and the zero-padded "f01".."f09". Throws ConfigError
/// listing the valid names otherwise.
FunctionId parse_function(std::string_view text);

enum class Modality { Unimodal, Multimodal };

enum class FunctionClass {
  UnimodalSeparable,
  UnimodalNonseparable,
  MultimodalSeparable,
  MultimodalNonseparable,
};

/// "unimodal separable", "multimodal nonseparable", ...
std::string_view class_label(FunctionClass c) noexcept;
/// Same labels with '-' instead of spaces, for CSV fields.
std::string_view class_key(FunctionClass c) noexcept;
FunctionClass parse_class_key(std::string_view key);

constexpr std::array<FunctionClass, 4> kAllClasses = {
    FunctionClass::UnimodalSeparable, FunctionClass::UnimodalNonseparable,
    FunctionClass::MultimodalSeparable, FunctionClass::MultimodalNonseparable};

/// Which formula f6 uses.
enum class StepForm {
  Floor,      ///< sum floor(x_i + 0.5)^2 on [-100, 100]; the default
  Quadratic,  ///< sum (x_i + 0.5)^2 on [-1.28, 1.28], as printed in some sources
};

/// Offset added to f8 so that its 30-dimensional minimum is approximately 0.
inline constexpr double kSchwefelOffset = 12569.486618164879;

struct BenchmarkFn {
  FunctionId id = FunctionId::f1;
  std::string name;
  int dim = 30;
  double lower = -100.0;
  double upper = 100.0;
  Modality modality = Modality::Unimodal;
  bool separable = true;
  double optimum_value = 0.0;
  /// Coordinate of the documented minimizer, repeated across all dimensions.
  double optimizer = 0.0;
  StepForm step_form = StepForm::Floor;

  FunctionClass function_class() const noexcept;
  bool noisy() const noexcept { return id == FunctionId::f7; }
  std::vector<double> optimizer_point() const { return std::vector<double>(dim, optimizer); }
};

/// One benchmark configured for \p dim dimensions.
BenchmarkFn make_function(FunctionId id, int dim = 30, StepForm step_form = StepForm::Floor);

/// All fourteen functions in id order.
std::vector<BenchmarkFn> catalog(int dim = 30, StepForm step_form = StepForm::Floor);

struct PenaltyParams {
  double a = 10.0;
  double k = 100.0;
  double m = 4.0;
};

/// Boundary penalty u(x, a, k, m) of the generalized penalized functions.
double penalty_u(double x, const PenaltyParams& p = {}) noexcept;

/// y = 1 + (x + 1) / 4, the change of variable inside f12.
constexpr double y_transform(double x) noexcept { return 1.0 + (x + 1.0) / 4.0; }

/// Objective value at \p x. f7 adds one uniform [0, 1) sample from \p noise;
/// every other function ignores the stream. Throws ConfigError when the
/// length of \p x differs from fn.dim.
double evaluate(const BenchmarkFn& fn, std::span<const double> x, Rng& noise);

/// Objective value without f7's noise term. Identical to evaluate() elsewhere.
double evaluate_noiseless(const BenchmarkFn& fn, std::span<const double> x);

}  // namespace devolab
