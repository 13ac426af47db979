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

#ifndef SVINEQ_BOUNDS_HPP
#define SVINEQ_BOUNDS_HPP

#include "svineq/concave.hpp"
#include "svineq/engine.hpp"
#include "svineq/index_comb.hpp"
#include "svineq/matrix.hpp"

namespace svineq {

// Certified perturbation bound on f-transformed spectral deviations:
//   actual = sum_k |f(sigma_{i_k}(X)) - f(sigma_{i_k}(Y))|
//   bound  = sum_{k<=m} f(sigma_k(X - Y))
// tightness = actual / bound, 0 for the 0/0 case. A bound of 0 with a
// positive actual is reported through gap.holds = false, never a division
// error.
struct BoundResult {
  double bound = 0.0;
  double actual = 0.0;
  double tightness = 0.0;
  ConcaveFn f = ConcaveFn::power(1.0);
  IndexSeq idx;
  GapReport gap;  // lhs = actual, rhs = bound
};

BoundResult spectral_deviation_bound(const ComplexMatrix& x,
                                     const ComplexMatrix& y, const ConcaveFn& f,
                                     const IndexSeq& idx,
                                     double tol_rel = kDefaultTolRel);

// f(x) = x^p over the full index range: Schatten-p quasi-norm deviations,
//   sum_i |sigma_i(X)^p - sigma_i(Y)^p| <= ||X - Y||_p^p.
BoundResult schatten_p_deviation(const ComplexMatrix& x, const ComplexMatrix& y,
                                 double p, double tol_rel = kDefaultTolRel);

}  // namespace svineq

#endif  // SVINEQ_BOUNDS_HPP
