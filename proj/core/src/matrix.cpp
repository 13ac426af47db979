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

#include "svineq/matrix.hpp"

#include <cmath>

namespace svineq {

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
  if (n < 1) throw InvalidDims("matrix side must be >= 1, got " + std::to_string(n));
  entries_.assign(static_cast<size_t>(n) * n, cplx{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int n, std::vector<cplx> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw InvalidDims("matrix side must be >= 1, got " + std::to_string(n));
  if (entries_.size() != static_cast<size_t>(n) * n)
    throw InvalidDims("expected " + std::to_string(static_cast<size_t>(n) * n) +
                      " entries, got " + std::to_string(entries_.size()));
  check_entries();
}

void ComplexMatrix::check_entries() const {
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k].real()) || !std::isfinite(entries_[k].imag()))
      throw NonFiniteEntry("non-finite entry at flat index " + std::to_string(k));
  }
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (o.n_ != n_) throw DimMismatch("matrix sizes differ in operator+");
  ComplexMatrix out = *this;
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (o.n_ != n_) throw DimMismatch("matrix sizes differ in operator-");
  ComplexMatrix out = *this;
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= o.entries_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (o.n_ != n_) throw DimMismatch("matrix sizes differ in operator*");
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const cplx a = (*this)(r, k);
      for (int c = 0; c < n_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian() const {
  double dev = 0.0;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev <= 1e-12 * (1.0 + max_abs());
}

}  // namespace svineq
