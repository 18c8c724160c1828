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

// Test-only reference implementations. They are written independently of
// core/ (long double, textbook term order, no shared helpers) so that a
// formula slip in the library shows up as a disagreement.

#pragma once

#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

using real = long double;

constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kE = 2.718281828459045235360287471352662498L;

inline real u(real x, real a, real k, real m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0;
}

inline real sin2(real v) {
  const real s = std::sin(v);
  return s * s;
}

/// Textbook form of benchmark \p id without f7's noise.
inline real evaluate(int id, const std::vector<double>& xd, bool floor_step = true) {
  std::vector<real> x(xd.begin(), xd.end());
  const std::size_t n = x.size();
  real s = 0;
  switch (id) {
    case 1:
      for (real v : x) s += v * v;
      return s;
    case 2: {
      real p = 1;
      for (real v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
      }
      return s + p;
    }
    case 3:
      for (std::size_t i = 0; i < n; ++i) {
        real inner = 0;
        for (std::size_t j = 0; j <= i; ++j) inner += x[j];
        s += inner * inner;
      }
      return s;
    case 4:
      for (real v : x) s = std::max(s, std::fabs(v));
      return s;
    case 5:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        s += 100 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(x[i] - 1, 2);
      }
      return s;
    case 6:
      for (real v : x) s += floor_step ? std::pow(std::floor(v + 0.5L), 2) : std::pow(v + 0.5L, 2);
      return s;
    case 7:
      for (std::size_t i = 0; i < n; ++i) s += static_cast<real>(i + 1) * std::pow(x[i], 4);
      return s;
    case 8:
      for (real v : x) s += v * std::sin(std::sqrt(std::fabs(v)));
      return -s + 12569.486618164879L;
    case 9:
      for (real v : x) s += v * v - 10 * std::cos(2 * kPi * v) + 10;
      return s;
    case 10: {
      real sq = 0, cs = 0;
      for (real v : x) {
        sq += v * v;
        cs += std::cos(2 * kPi * v);
      }
      return 20 + kE - 20 * std::exp(-0.2L * std::sqrt(sq / n)) - std::exp(cs / n);
    }
    case 11: {
      real p = 1;
      for (std::size_t i = 0; i < n; ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<real>(i + 1)));
      }
      return s / 4000 - p + 1;
    }
    case 12: {
      std::vector<real> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = 1 + (x[i] + 1) / 4;
      real inner = 10 * sin2(kPi * y[0]);
      for (std::size_t i = 0; i + 1 < n; ++i) inner += std::pow(y[i] - 1, 2) * (1 + 10 * sin2(kPi * y[i + 1]));
      inner += std::pow(y[n - 1] - 1, 2);
      real pen = 0;
      for (real v : x) pen += u(v, 10, 100, 4);
      return kPi / n * inner + pen;
    }
    case 13: {
      real inner = sin2(3 * kPi * x[0]);
      for (std::size_t i = 0; i + 1 < n; ++i) inner += std::pow(x[i] - 1, 2) * (1 + sin2(3 * kPi * x[i + 1]));
      inner += std::pow(x[n - 1] - 1, 2) * (1 + sin2(2 * kPi * x[n - 1]));
      real pen = 0;
      for (real v : x) pen += u(v, 10, 100, 4);
      return 0.1L * inner + pen;
    }
    case 14:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        s += x[i] * x[i] + 2 * x[i + 1] * x[i + 1] - 0.3L * std::cos(3 * kPi * x[i]) -
             0.4L * std::cos(4 * kPi * x[i + 1]) + 0.7L;
      }
      return s;
  }
  return std::nanl("");
}

/// Expected number of binomial-crossover components taken from the mutant:
/// j_rand always, every other index with probability cr.
inline double binomial_expected_count(int dim, double cr) { return 1.0 + (dim - 1) * cr; }

/// Mean of the uniform distribution on [lo, hi].
inline double uniform_mean(double lo, double hi) { return (lo + hi) / 2.0; }

}  // namespace oracle
