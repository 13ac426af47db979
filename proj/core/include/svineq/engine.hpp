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

#ifndef SVINEQ_ENGINE_HPP
#define SVINEQ_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "svineq/concave.hpp"
#include "svineq/index_comb.hpp"
#include "svineq/matrix.hpp"
#include "svineq/spectrum.hpp"

namespace svineq {

using json = nlohmann::ordered_json;

inline constexpr double kDefaultTolRel = 1e-9;

// One evaluated inequality: lhs <= rhs with slack = rhs - lhs.
// "holds" means slack >= -tol_rel * (1 + |lhs| + |rhs|).
struct GapReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double scale = 1.0;
  bool holds = true;
  double tol_rel = kDefaultTolRel;
};

GapReport make_gap(std::string name, double lhs, double rhs,
                   double tol_rel = kDefaultTolRel);

// First positions where the alpha/beta/gamma sequences drop below t.
// Sentinel m+1 when no value is below t.
struct ThresholdIndices {
  int a = 1;
  int b = 1;
  int c = 1;
  double t = 1.0;
};

struct TraceStep {
  std::string name;
  GapReport gap;
};

// Numerically checked walk-through of one proof, on one concrete instance.
struct TraceReport {
  std::string theorem;
  std::vector<TraceStep> steps;
  json context;
  bool all_hold = true;
  // Set when a supplied premise (a TF inequality assumed by the proof)
  // fails on the given data; reported rather than thrown.
  std::optional<GapReport> premise_violation;
};

// --- plain and f-weighted gaps -------------------------------------------

// Eq-style sum inequality over an admissible pair:
//   sum_k gamma(i_k + j_k - k) <= sum_k alpha(i_k) + sum_k beta(j_k)
GapReport tf_gap(const Spectrum& alpha, const Spectrum& beta,
                 const Spectrum& gamma, const TFPair& pair,
                 double tol_rel = kDefaultTolRel);

// Same with f applied to every spectral value. Requires non-negative spectra.
GapReport f_tf_gap(const Spectrum& alpha, const Spectrum& beta,
                   const Spectrum& gamma, const TFPair& pair,
                   const ConcaveFn& f, double tol_rel = kDefaultTolRel);

// sum_k |f(sigma_{i_k}(X)) - f(sigma_{i_k}(Y))| <= sum_{k<=m} f(sigma_k(X-Y))
GapReport mirsky_f_gap(const ComplexMatrix& x, const ComplexMatrix& y,
                       const IndexSeq& idx, const ConcaveFn& f,
                       double tol_rel = kDefaultTolRel);

// Same evaluation on precomputed spectra of X, Y and X-Y.
GapReport mirsky_f_gap_from_spectra(const Spectrum& sx, const Spectrum& sy,
                                    const Spectrum& sdiff, const IndexSeq& idx,
                                    const ConcaveFn& f,
                                    double tol_rel = kDefaultTolRel);

// Exchange inequality over a partition:
//   gamma(I_CL) + alpha(I_AL) <= alpha(I_CR) + gamma(I_AR) + beta(J)
GapReport theorem3_gap(const Spectrum& alpha, const Spectrum& beta,
                       const Spectrum& gamma, const IndexPartition& p,
                       double tol_rel = kDefaultTolRel);

ThresholdIndices threshold_indices(const Spectrum& alpha, const Spectrum& beta,
                                   const Spectrum& gamma, const IndexSeq& idx,
                                   double t);

// --- proof traces --------------------------------------------------------

TraceReport trace_theorem1(const ComplexMatrix& x, const ComplexMatrix& y,
                           const IndexSeq& idx, double t,
                           const std::vector<PartFlag>& flags,
                           double tol_rel = kDefaultTolRel);

TraceReport trace_theorem2(const Spectrum& alpha, const Spectrum& beta,
                           const Spectrum& gamma, const TFPair& pair, double t,
                           double tol_rel = kDefaultTolRel,
                           uint64_t premise_seed = 0);

TraceReport trace_theorem3(const ComplexMatrix& a, const ComplexMatrix& b,
                           const IndexPartition& p,
                           double tol_rel = kDefaultTolRel);

// Flags matching the actual sign pattern gamma(i) >= alpha(i), with ties to C.
std::vector<PartFlag> sign_flags(const Spectrum& gamma, const Spectrum& alpha,
                                 const IndexSeq& idx);

// --- Hermitian-eigenvalue violation search -------------------------------

enum class NegativeConvention { SkipNegative, OddExtension };

struct SearchWitness {
  ComplexMatrix a, b;
  TFPair pair;
  GapReport plain;     // TF on the eigenvalues, holds
  GapReport fversion;  // f-TF under the convention, violated
};

// Samples random Hermitian pairs and hunts for instances where the plain TF
// inequality holds but its f-version fails under the chosen convention for
// negative eigenvalues. With psd=true samples G G* pairs instead, where no
// witness can exist.
std::vector<SearchWitness> hermitian_fversion_search(
    int budget, const ConcaveFn& f, NegativeConvention convention,
    uint64_t seed, int n = 4, bool psd = false,
    double tol_rel = kDefaultTolRel);

}  // namespace svineq

#endif  // SVINEQ_ENGINE_HPP
