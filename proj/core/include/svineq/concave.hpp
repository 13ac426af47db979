// Copyright 2026 The svineq Authors
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

#ifndef SVINEQ_CONCAVE_HPP
#define SVINEQ_CONCAVE_HPP

#include <string>
#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

enum class ConcaveForm { Hook, Power, Log1p, PiecewiseLinear };

struct ValidationResult {
  bool ok = true;
  std::string message;  // which invariant failed, and where
};

// Non-negative concave function on [0, inf) with f(0) = 0.
//
// Forms:
//   Hook(t)      min(x, t)
//   Power(p)     x^p for p in (0, 1]
//   Log1p(c)     c * log(1 + x/c), unit slope at 0
//   PiecewiseLinear  breakpoints x_1 < ... < x_B with slopes s_0 >= ... >= s_B,
//                    s_0 on [0, x_1] and s_B beyond x_B.
class ConcaveFn {
 public:
  static ConcaveFn hook(double t);
  static ConcaveFn power(double p);
  static ConcaveFn log1p(double scale);
  static ConcaveFn piecewise_linear(std::vector<double> breakpoints,
                                    std::vector<double> slopes);

  ConcaveForm form() const { return form_; }
  double param() const { return param_; }  // t, p or scale
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& slopes() const { return slopes_; }

  // Evaluation; throws NegativeArgument for x < 0.
  double operator()(double x) const;

  // Semantic admissibility check: non-negative, concave, f(0)=0.
  ValidationResult validate() const;
  void require_valid() const;  // throws InvalidConcaveFn if validate() fails

  // c * f, for PWL only (scales all slopes). Used to check scaling covariance.
  ConcaveFn scaled(double c) const;

  std::string describe() const;

 private:
  ConcaveFn() = default;

  ConcaveForm form_ = ConcaveForm::Hook;
  double param_ = 1.0;
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
};

// Finite atomic measure over hook thresholds plus a linear tail:
//   f(x) = sum_b weight_b * min(x, t_b) + linear_tail * x.
struct HookMeasure {
  struct Atom {
    double t = 0.0;
    double weight = 0.0;
  };
  std::vector<Atom> atoms;
  double linear_tail = 0.0;

  double eval(double x) const;
};

// Slope-difference telescoping of a validated PWL function.
// Exact: reconstruction equals the input for all x >= 0.
// Throws NotPiecewiseLinear for closed forms; bridge those via
// pwl_approximate first.
HookMeasure hook_decompose(const ConcaveFn& f);

struct PwlApprox {
  ConcaveFn fn;          // concave interpolant, below f on [0, x_max]
  double sup_error = 0;  // certified bound on sup |f - fn| over [0, x_max]
};

// Chord interpolant of f at `segments`+1 geometrically spaced nodes in
// (0, x_max], with f's own kinks inserted so that PWL inputs and hooks
// reproduce exactly.
PwlApprox pwl_approximate(const ConcaveFn& f, double x_max, int segments);

}  // namespace svineq

#endif  // SVINEQ_CONCAVE_HPP
