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

#ifndef SVINEQ_MATRIX_HPP
#define SVINEQ_MATRIX_HPP

#include <complex>
#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. All entries must be finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n);  // zero matrix
  ComplexMatrix(int n, std::vector<cplx> entries);

  static ComplexMatrix diagonal(const std::vector<double>& d);

  int n() const { return n_; }
  const std::vector<cplx>& entries() const { return entries_; }

  cplx& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * n_ + c]; }
  const cplx& operator()(int r, int c) const {
    return entries_[static_cast<size_t>(r) * n_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator-() const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;

  double max_abs() const;         // max |x_ij|
  double frobenius_norm() const;  // sqrt(sum |x_ij|^2)

  // ||A - A*||_max <= 1e-12 * (1 + ||A||_max)
  bool is_hermitian() const;

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  void check_entries() const;

  int n_ = 0;
  std::vector<cplx> entries_;
};

}  // namespace svineq

#endif  // SVINEQ_MATRIX_HPP
