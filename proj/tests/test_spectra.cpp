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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "support/oracles.hpp"
#include "svineq/ensemble.hpp"
#include "svineq/spectra.hpp"

using namespace svineq;

TEST_CASE("singular values of simple matrices") {
  const Spectrum s = singular_values(ComplexMatrix::diagonal({3.0, -4.0}));
  CHECK(s(1) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(s(2) == doctest::Approx(3.0).epsilon(1e-12));

  const Spectrum z = singular_values(ComplexMatrix(2));
  CHECK(z(1) == 0.0);
  CHECK(z(2) == 0.0);

  const ComplexMatrix nil(2, {cplx(0), cplx(1), cplx(0), cplx(0)});
  const Spectrum sn = singular_values(nil);
  CHECK(sn(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sn(2) == doctest::Approx(0.0));
}

TEST_CASE("singular values match the characteristic polynomial oracle") {
  for (int n = 1; n <= 3; ++n) {
    Ensemble e{EnsembleKind::GinibreComplex, n, 11};
    for (uint64_t i = 0; i < 100; ++i) {
      const ComplexMatrix x = sample(e, i);
      const Spectrum s = singular_values(x);
      const std::vector<double> ref = test::svd_oracle_small(x);
      for (int k = 1; k <= n; ++k)
        CHECK(std::abs(s(k) - ref[static_cast<size_t>(k - 1)]) <=
              1e-10 * (1.0 + ref[0]));
    }
  }
}

TEST_CASE("singular values reject non-finite entries") {
  CHECK_THROWS_AS(
      ComplexMatrix(1, {cplx(std::numeric_limits<double>::quiet_NaN())}),
      NonFiniteEntry);
  CHECK_THROWS_AS(ComplexMatrix(2, {cplx(1), cplx(2), cplx(3)}), InvalidDims);
}

TEST_CASE("hermitian eigenvalues of simple matrices") {
  const Spectrum d = hermitian_eigenvalues(ComplexMatrix::diagonal({1.0, 2.0}));
  CHECK(d(1) == doctest::Approx(2.0));
  CHECK(d(2) == doctest::Approx(1.0));

  const ComplexMatrix pauli_x(2, {cplx(0), cplx(1), cplx(1), cplx(0)});
  const Spectrum p = hermitian_eigenvalues(pauli_x);
  CHECK(p(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p(2) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues match the quadratic formula oracle") {
  Ensemble e{EnsembleKind::HermitianGaussian, 2, 13};
  for (uint64_t i = 0; i < 200; ++i) {
    const ComplexMatrix a = sample(e, i);
    const Spectrum s = hermitian_eigenvalues(a);
    const std::vector<double> ref = test::hermitian2_oracle(a);
    const double scale = 1.0 + std::abs(ref[0]) + std::abs(ref[1]);
    CHECK(std::abs(s(1) - ref[0]) <= 1e-12 * scale);
    CHECK(std::abs(s(2) - ref[1]) <= 1e-12 * scale);
  }
}

TEST_CASE("hermitian eigenvalues reject non-hermitian input") {
  const ComplexMatrix a(2, {cplx(0), cplx(1), cplx(0), cplx(0)});
  CHECK_THROWS_AS(hermitian_eigenvalues(a), NotHermitian);
}

TEST_CASE("doubled hermitian embedding has the +-singular spectrum") {
  const ComplexMatrix one(1, {cplx(2)});
  const ComplexMatrix emb = wielandt_embed(one);
  CHECK(emb.n() == 2);
  CHECK(emb(0, 1) == cplx(2));
  CHECK(emb(1, 0) == cplx(2));
  const Spectrum es = hermitian_eigenvalues(emb);
  CHECK(es(1) == doctest::Approx(2.0));
  CHECK(es(2) == doctest::Approx(-2.0));

  const ComplexMatrix nil(2, {cplx(0), cplx(1), cplx(0), cplx(0)});
  const Spectrum en = hermitian_eigenvalues(wielandt_embed(nil));
  CHECK(en(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(en(2) == doctest::Approx(0.0));
  CHECK(en(3) == doctest::Approx(0.0));
  CHECK(en(4) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("embedding spectrum cross-checks the SVD routine") {
  Ensemble e{EnsembleKind::GinibreComplex, 3, 17};
  for (uint64_t i = 0; i < 50; ++i) {
    const ComplexMatrix a = sample(e, i);
    const Spectrum sv = singular_values(a);
    const Spectrum emb = hermitian_eigenvalues(wielandt_embed(a));
    const double tol = 1e-10 * (1.0 + sv(1));
    for (int k = 1; k <= 3; ++k) {
      CHECK(std::abs(emb(k) - sv(k)) <= tol);
      CHECK(std::abs(emb(2 * 3 + 1 - k) + sv(k)) <= tol);
    }
  }
}

TEST_CASE("singular values are unitarily invariant and sign invariant") {
  Ensemble e{EnsembleKind::GinibreComplex, 4, 19};
  CounterRng rng(19, 900);
  for (uint64_t i = 0; i < 25; ++i) {
    const ComplexMatrix x = sample(e, i);
    const Spectrum s = singular_values(x);
    const ComplexMatrix u = test::random_unitary(4, rng);
    const ComplexMatrix v = test::random_unitary(4, rng);
    const Spectrum su = singular_values(u * x * v);
    const Spectrum sa = singular_values(x.adjoint());
    const Spectrum sm = singular_values(-x);
    const double tol = 1e-9 * (1.0 + s(1));
    for (int k = 1; k <= 4; ++k) {
      CHECK(std::abs(su(k) - s(k)) <= tol);
      CHECK(std::abs(sa(k) - s(k)) <= tol);
      CHECK(std::abs(sm(k) - s(k)) <= tol);
    }
    double energy = 0.0;
    for (int k = 1; k <= 4; ++k) energy += s(k) * s(k);
    const double fro2 = x.frobenius_norm() * x.frobenius_norm();
    CHECK(std::abs(energy - fro2) <= 1e-10 * (1.0 + fro2));
  }
}

TEST_CASE("spectrum type enforces ordering and sign invariants") {
  CHECK_THROWS_AS(Spectrum(SpectrumKind::Singular, {1.0, 2.0}), InvalidInput);
  CHECK_THROWS_AS(Spectrum(SpectrumKind::Singular, {1.0, -0.5}),
                  NegativeSpectrum);
  const Spectrum h(SpectrumKind::HermitianEigen, {1.0, -0.5});
  CHECK_FALSE(h.non_negative());
  CHECK_THROWS_AS(h(3), DimMismatch);
  CHECK_THROWS_AS(h(0), DimMismatch);
}
