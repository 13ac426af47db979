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

#include "svineq/bounds.hpp"

#include <numeric>

namespace svineq {

BoundResult spectral_deviation_bound(const ComplexMatrix& x,
                                     const ComplexMatrix& y, const ConcaveFn& f,
                                     const IndexSeq& idx, double tol_rel) {
  BoundResult out;
  out.f = f;
  out.idx = idx;
  out.gap = mirsky_f_gap(x, y, idx, f, tol_rel);
  out.gap.name = "spectral_deviation";
  out.actual = out.gap.lhs;
  out.bound = out.gap.rhs;
  out.tightness = out.bound > 0.0 ? out.actual / out.bound : 0.0;
  return out;
}

BoundResult schatten_p_deviation(const ComplexMatrix& x, const ComplexMatrix& y,
                                 double p, double tol_rel) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidP("p must lie in (0, 1]");
  std::vector<int> full(static_cast<size_t>(x.n()));
  std::iota(full.begin(), full.end(), 1);
  BoundResult out = spectral_deviation_bound(
      x, y, ConcaveFn::power(p), IndexSeq(x.n(), std::move(full)), tol_rel);
  out.gap.name = "schatten_p";
  return out;
}

}  // namespace svineq
