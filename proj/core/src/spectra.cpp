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

#include "svineq/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace svineq {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.n(), m.n());
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) e(r, c) = m(r, c);
  return e;
}

}  // namespace

Spectrum::Spectrum(SpectrumKind kind, std::vector<double> values)
    : kind_(kind), values_(std::move(values)) {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw NonFiniteEntry("non-finite spectral value at position " + std::to_string(i));
    if (i + 1 < values_.size() && values_[i] < values_[i + 1])
      throw InvalidInput("spectrum not sorted non-ascending at position " +
                         std::to_string(i));
  }
  if (kind_ == SpectrumKind::Singular && !values_.empty() && values_.back() < 0.0)
    throw NegativeSpectrum("singular spectrum contains a negative value");
}

double Spectrum::operator()(int i) const {
  if (i < 1 || i > size())
    throw DimMismatch("spectral index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(size()));
  return values_[static_cast<size_t>(i - 1)];
}

bool Spectrum::non_negative() const {
  return values_.empty() || values_.back() >= 0.0;
}

Spectrum singular_values(const ComplexMatrix& x) {
  // Two-sided Jacobi delivers high relative accuracy at the n <= 64 scale
  // this library targets.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(x));
  const auto& sv = svd.singularValues();
  std::vector<double> vals(sv.data(), sv.data() + sv.size());
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return Spectrum(SpectrumKind::Singular, std::move(vals));
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& a) {
  const ComplexMatrix adj = a.adjoint();
  double dev = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k)
    dev = std::max(dev, std::abs(a.entries()[k] - adj.entries()[k]));
  if (dev > 1e-12 * (1.0 + a.max_abs()))
    throw NotHermitian("||A - A*||_max = " + std::to_string(dev) +
                       " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a),
                                                     Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  std::vector<double> vals(ev.size());
  for (int i = 0; i < ev.size(); ++i) vals[static_cast<size_t>(i)] = ev(ev.size() - 1 - i);
  return Spectrum(SpectrumKind::HermitianEigen, std::move(vals));
}

ComplexMatrix wielandt_embed(const ComplexMatrix& a) {
  const int n = a.n();
  ComplexMatrix out(2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      out(r, n + c) = a(r, c);
      out(n + c, r) = std::conj(a(r, c));
    }
  return out;
}

}  // namespace svineq
