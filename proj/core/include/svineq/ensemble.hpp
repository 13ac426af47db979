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

#ifndef SVINEQ_ENSEMBLE_HPP
#define SVINEQ_ENSEMBLE_HPP

#include <cstdint>

#include "svineq/matrix.hpp"

namespace svineq {

enum class EnsembleKind {
  GinibreComplex,       // i.i.d. standard complex Gaussian entries
  HermitianGaussian,    // (G + G*) / 2
  DiagonalNonNegative,  // sorted |N(0,1)| diagonal
  LowRankPlusNoise,     // rank-r Ginibre factor product + noise_scale * Ginibre
};

struct Ensemble {
  EnsembleKind kind = EnsembleKind::GinibreComplex;
  int n = 1;
  uint64_t seed = 0;
  int rank = 1;              // LowRankPlusNoise only
  double noise_scale = 0.0;  // LowRankPlusNoise only
};

// Deterministic function of (e, index): identical arguments reproduce
// bit-identical matrices.
ComplexMatrix sample(const Ensemble& e, uint64_t index);

}  // namespace svineq

#endif  // SVINEQ_ENSEMBLE_HPP
