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

#include "svineq/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "svineq/rng.hpp"

namespace svineq {

namespace {

ComplexMatrix ginibre(CounterRng& rng, int rows, int cols, int n_embed) {
  // Entries ~ (N(0,1) + i N(0,1)) / sqrt(2). For non-square factors the
  // matrix is stored in the top-left corner of an n_embed x n_embed frame.
  ComplexMatrix m(n_embed);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = cplx(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
  return m;
}

}  // namespace

ComplexMatrix sample(const Ensemble& e, uint64_t index) {
  if (e.n < 1) throw InvalidDims("ensemble dimension must be >= 1");
  if (e.rank < 1 || e.rank > e.n)
    throw InvalidDims("ensemble rank must lie in [1, n]");
  if (e.noise_scale < 0.0) throw InvalidInput("noise_scale must be >= 0");

  const uint64_t stream =
      (index << 3) | static_cast<uint64_t>(static_cast<int>(e.kind));
  CounterRng rng(e.seed, stream);

  switch (e.kind) {
    case EnsembleKind::GinibreComplex:
      return ginibre(rng, e.n, e.n, e.n);
    case EnsembleKind::HermitianGaussian: {
      const ComplexMatrix g = ginibre(rng, e.n, e.n, e.n);
      ComplexMatrix h(e.n);
      for (int r = 0; r < e.n; ++r)
        for (int c = 0; c < e.n; ++c)
          h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
      return h;
    }
    case EnsembleKind::DiagonalNonNegative: {
      std::vector<double> d(static_cast<size_t>(e.n));
      for (double& v : d) v = std::abs(rng.gaussian());
      std::sort(d.begin(), d.end(), std::greater<double>());
      return ComplexMatrix::diagonal(d);
    }
    case EnsembleKind::LowRankPlusNoise: {
      const ComplexMatrix u = ginibre(rng, e.n, e.rank, e.n);
      const ComplexMatrix v = ginibre(rng, e.n, e.rank, e.n);
      ComplexMatrix out = u * v.adjoint();
      if (e.noise_scale > 0.0) {
        const ComplexMatrix g = ginibre(rng, e.n, e.n, e.n);
        for (int r = 0; r < e.n; ++r)
          for (int c = 0; c < e.n; ++c)
            out(r, c) += e.noise_scale * g(r, c);
      }
      return out;
    }
  }
  throw InvalidInput("unknown ensemble kind");
}

}  // namespace svineq
