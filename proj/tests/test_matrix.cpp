// Copyright 2026 The sublocal Authors
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
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sublocal/errors.hpp"
#include "sublocal/matrix.hpp"
#include "sublocal/spaces.hpp"

using namespace sublocal;

namespace {

ComplexMatrix random_psd(std::size_t d, std::size_t rank, Rng& rng) {
  const ComplexMatrix g = random_ginibre(d, rank, rng);
  return g * g.adjoint();
}

}  // namespace

TEST_CASE("matrix construction rejects bad data") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), ShapeError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(NAN, 0)}), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {cplx(0, INFINITY)}), DomainError);
  CHECK_THROWS_AS(Tolerance(0.0), DomainError);
  CHECK_THROWS_AS(Tolerance(-1e-3), DomainError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST_CASE("products agree with the loop oracle") {
  Rng rng(Seed{1});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = rng.uniform_int(1, 9), k = rng.uniform_int(1, 9), n = rng.uniform_int(1, 9);
    const ComplexMatrix a = random_ginibre(m, k, rng);
    const ComplexMatrix b = random_ginibre(k, n, rng);
    CHECK(oracle::max_diff(a * b, oracle::matmul(a, b)) <= 1e-12);
  }
  CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), ShapeError);
}

TEST_CASE("kron") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));

  const ComplexMatrix x = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  const ComplexMatrix k = kron(x, ComplexMatrix::identity(2));
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(k == expected);

  Rng rng(Seed{2});
  const ComplexMatrix a = random_ginibre(2, 2, rng);
  const ComplexMatrix b = random_ginibre(2, 2, rng);
  const ComplexMatrix xv = random_ginibre(2, 1, rng);
  const ComplexMatrix yv = random_ginibre(2, 1, rng);
  const ComplexMatrix lhs = kron(a, b) * kron(xv, yv);
  const ComplexMatrix rhs = kron(oracle::matmul(a, xv), oracle::matmul(b, yv));
  CHECK(oracle::max_diff(lhs, rhs) <= 1e-12);

  SUBCASE("associative entrywise") {
    // Gaussian-integer entries keep every product exact.
    auto gint = [&](std::size_t r, std::size_t c) {
      ComplexMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m(i, j) = cplx(static_cast<double>(rng.uniform_int(0, 6)) - 3.0,
                         static_cast<double>(rng.uniform_int(0, 6)) - 3.0);
      return m;
    };
    const ComplexMatrix ia = gint(2, 3), ib = gint(3, 1), ic = gint(2, 2);
    CHECK(kron(kron(ia, ib), ic) == kron(ia, kron(ib, ic)));
    const ComplexMatrix c = random_ginibre(3, 2, rng);
    CHECK(oracle::max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
  }
}

TEST_CASE("partial_trace") {
  Rng rng(Seed{3});
  const ComplexMatrix a = random_ginibre(3, 3, rng);
  const ComplexMatrix b = random_ginibre(2, 2, rng);
  ComplexMatrix expect = a;
  expect *= b.trace();
  CHECK(oracle::max_diff(partial_trace(kron(a, b), 3, 2, Factor::B), expect) <= 1e-12);
  ComplexMatrix expect_b = b;
  expect_b *= a.trace();
  CHECK(oracle::max_diff(partial_trace(kron(a, b), 3, 2, Factor::A), expect_b) <= 1e-12);

  ComplexMatrix two_i = ComplexMatrix::identity(2);
  two_i *= 2.0;
  CHECK(partial_trace(ComplexMatrix::identity(4), 2, 2, Factor::A) == two_i);

  // Unnormalized maximally entangled projector |Omega><Omega|.
  std::vector<cplx> omega(9);
  for (std::size_t i = 0; i < 3; ++i) omega[i * 3 + i] = 1.0;
  ComplexMatrix proj(9, 9);
  proj.add_outer(1.0, omega, omega);
  CHECK(oracle::max_diff(partial_trace(proj, 3, 3, Factor::B), ComplexMatrix::identity(3)) == 0.0);

  SUBCASE("tracing a unit-trace factor recovers the other") {
    const ComplexMatrix rho = random_density(4, 2, Seed{9});
    CHECK(oracle::max_diff(partial_trace(kron(a, rho), 3, 4, Factor::B), a) <= 1e-12);
  }

  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(5), 2, 2, Factor::A), ShapeError);
}

TEST_CASE("vec and unvec") {
  const std::size_t dt = 3, ds = 4;
  const ComplexMatrix ts = oracle::matmul(ComplexMatrix::basis(dt, 2), ComplexMatrix::basis(ds, 1).adjoint());
  const auto v = vec(ts);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == cplx(i == 2 * ds + 1 ? 1.0 : 0.0));

  Rng rng(Seed{4});
  const ComplexMatrix m = random_ginibre(3, 5, rng);
  CHECK(unvec(vec(m), 3, 5) == m);
  CHECK_THROWS_AS(unvec(vec(m), 4, 4), ShapeError);

  // vec(A X B) = (A (x) B^T) vec(X) for row-major vec.
  const ComplexMatrix a = random_ginibre(2, 2, rng);
  const ComplexMatrix x = random_ginibre(2, 2, rng);
  const ComplexMatrix b = random_ginibre(2, 2, rng);
  const ComplexMatrix lhs = ComplexMatrix::column(vec(oracle::matmul(oracle::matmul(a, x), b)));
  const ComplexMatrix rhs = oracle::matmul(kron(a, b.transpose()), ComplexMatrix::column(vec(x)));
  CHECK(oracle::max_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("eigh") {
  const EigenSystem id = eigh(ComplexMatrix::identity(3));
  CHECK(id.values == std::vector<double>{1, 1, 1});

  const EigenSystem d = eigh(ComplexMatrix::diagonal(std::vector<double>{2, 0}));
  CHECK(d.values[0] == doctest::Approx(2.0));
  CHECK(d.values[1] == doctest::Approx(0.0));
  CHECK(std::abs(d.vectors(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(d.vectors(1, 1)) == doctest::Approx(1.0));

  Rng rng(Seed{5});
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const EigenSystem es = eigh(h);
    for (std::size_t i = 1; i < n; ++i) CHECK(es.values[i - 1] >= es.values[i]);
    ComplexMatrix rebuilt(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = es.vectors.col(i);
      rebuilt.add_outer(es.values[i], u, u);
    }
    CHECK(oracle::frob(rebuilt - h) <= 1e-10 * oracle::frob(h));
    CHECK(oracle::identity_residual(oracle::matmul(oracle::dagger(es.vectors), es.vectors)) <= 1e-10);
  }

  const ComplexMatrix skew = ComplexMatrix::from_rows({{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(eigh(skew), DomainError);
  CHECK_THROWS_AS(eigh(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(4)));
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal(std::vector<double>{1, -1})));
  Rng rng(Seed{6});
  const auto v = random_ginibre(6, 1, rng).col(0);
  ComplexMatrix vv(6, 6);
  vv.add_outer(1.0, v, v);
  CHECK(is_psd(vv));
  CHECK_FALSE(is_psd(ComplexMatrix::from_rows({{0, 1}, {-1, 0}})));
  CHECK_THROWS_AS(is_psd(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("pinv") {
  CHECK(oracle::max_diff(pinv(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <= 1e-15);
  const ComplexMatrix p = pinv(ComplexMatrix::diagonal(std::vector<double>{2, 0}));
  CHECK(oracle::max_diff(p, ComplexMatrix::diagonal(std::vector<double>{0.5, 0})) <= 1e-15);
  Rng rng(Seed{7});
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = random_psd(6, rng.uniform_int(1, 6), rng);
    const ComplexMatrix mpm = oracle::matmul(oracle::matmul(m, pinv(m)), m);
    CHECK(oracle::max_diff(mpm, m) <= 1e-9);
  }
}

TEST_CASE("expm_hermitian") {
  CHECK(oracle::max_diff(expm_hermitian(ComplexMatrix(3, 3), 0.7), ComplexMatrix::identity(3)) <= 1e-15);
  const ComplexMatrix u = expm_hermitian(ComplexMatrix::diagonal(std::vector<double>{std::numbers::pi, 0}), 1.0);
  CHECK(oracle::max_diff(u, ComplexMatrix::diagonal(std::vector<double>{-1, 1})) <= 1e-15);
  Rng rng(Seed{8});
  for (std::size_t n : {2u, 5u, 12u}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const ComplexMatrix e = expm_hermitian(h, 1.3);
    CHECK(oracle::identity_residual(oracle::matmul(oracle::dagger(e), e)) <= 1e-10);
    CHECK(oracle::identity_residual(oracle::matmul(e, expm_hermitian(h, -1.3))) <= 1e-10);
    // First-order check: e^{-ith} ~ I - ith for small t.
    const double t = 1e-6;
    ComplexMatrix approx = ComplexMatrix::identity(n);
    ComplexMatrix step = h;
    step *= cplx(0, -t);
    approx += step;
    CHECK(oracle::max_diff(expm_hermitian(h, t), approx) <= 1e-10);
  }
  CHECK_THROWS_AS(expm_hermitian(ComplexMatrix::from_rows({{0, 1}, {0, 0}}), 1.0), DomainError);
}

TEST_CASE("complete_isometry") {
  const ComplexMatrix u = complete_isometry(ComplexMatrix::basis(2, 0));
  CHECK(u(0, 0) == cplx(1.0));
  CHECK(u(1, 0) == cplx(0.0));
  CHECK(oracle::identity_residual(oracle::matmul(oracle::dagger(u), u)) <= 1e-12);

  const ComplexMatrix w = random_unitary(4, Seed{10});
  CHECK(complete_isometry(w) == w);

  Rng rng(Seed{11});
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = rng.uniform_int(2, 8);
    const std::size_t r = rng.uniform_int(1, d);
    const ComplexMatrix iso = random_isometry(d, r, rng);
    const ComplexMatrix full = complete_isometry(iso);
    CHECK(oracle::identity_residual(oracle::matmul(oracle::dagger(full), full)) <= 1e-11);
    bool bits_equal = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < r; ++j) bits_equal = bits_equal && full(i, j) == iso(i, j);
    CHECK(bits_equal);
    CHECK(complete_isometry(iso) == full);
  }
  ComplexMatrix bad = ComplexMatrix::basis(3, 0);
  bad *= 2.0;
  CHECK_THROWS_AS(complete_isometry(bad), DomainError);
}

TEST_CASE("operator norm and svd") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{3, 0}, {0, -4}, {0, 0}});
  CHECK(operator_norm(m) == doctest::Approx(4.0));
  Rng rng(Seed{12});
  const ComplexMatrix a = random_ginibre(4, 3, rng);
  const SingularValues sv = svd(a);
  ComplexMatrix rebuilt(4, 3);
  for (std::size_t i = 0; i < sv.values.size(); ++i) rebuilt.add_outer(sv.values[i], sv.u.col(i), sv.v.col(i));
  CHECK(oracle::max_diff(rebuilt, a) <= 1e-12);
}
