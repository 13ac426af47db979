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

#ifndef SVINEQ_SPECTRA_HPP
#define SVINEQ_SPECTRA_HPP

#include "svineq/matrix.hpp"
#include "svineq/spectrum.hpp"

namespace svineq {

// All n singular values, non-ascending. High relative accuracy Jacobi SVD.
Spectrum singular_values(const ComplexMatrix& x);

// All n eigenvalues of a Hermitian matrix, non-ascending.
// Throws NotHermitian when ||A - A*||_max > 1e-12 * (1 + ||A||_max).
Spectrum hermitian_eigenvalues(const ComplexMatrix& a);

// The 2n x 2n Hermitian block matrix [[0, A], [A*, 0]].
// Its eigenvalues are the singular values of A and their negatives.
ComplexMatrix wielandt_embed(const ComplexMatrix& a);

}  // namespace svineq

#endif  // SVINEQ_SPECTRA_HPP
