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

#include "doctest.h"
#include "oracles.hpp"
#include "sublocal/errors.hpp"
#include "sublocal/spaces.hpp"

using namespace sublocal;

TEST_CASE("subspace splits and projectors") {
  CHECK_THROWS_AS(SubspaceSplit(0, 2), DomainError);
  CHECK_THROWS_AS(SubspaceSplit(2, 0), DomainError);

  CHECK(projector(SubspaceSplit(1, 1), 1) == ComplexMatrix::diagonal(std::vector<double>{1, 0}));
  CHECK(projector(SubspaceSplit(2, 3), 2) ==
        ComplexMatrix::diagonal(std::vector<double>{0, 0, 1, 1, 1}));
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      const SubspaceSplit s(a, b);
      const ComplexMatrix p1 = projector(s, 1);
      const ComplexMatrix p2 = projector(s, 2);
      CHECK(p1 * p2 == ComplexMatrix(a + b, a + b));
      CHECK(p1 * p1 == p1);
      CHECK(p1 + p2 == ComplexMatrix::identity(a + b));
    }
  }
  CHECK_THROWS_AS(projector(SubspaceSplit(1, 1), 3), DomainError);
}

TEST_CASE("random_density") {
  CHECK(random_density(1, 1, Seed{0}) == ComplexMatrix::identity(1));
  CHECK_THROWS_AS(random_density(3, 0, Seed{0}), DomainError);
  CHECK_THROWS_AS(random_density(3, 4, Seed{0}), DomainError);

  const EigenSystem es = eigh(random_density(2, 2, Seed{17}));
  CHECK(es.values[0] + es.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.values[1] > 0.0);

  CHECK(random_density(4, 2, Seed{99}) == random_density(4, 2, Seed{99}));
  CHECK_FALSE(random_density(4, 2, Seed{99}) == random_density(4, 2, Seed{100}));

  Rng rng(Seed{5});
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = rng.uniform_int(1, 6);
    const std::size_t r = rng.uniform_int(1, d);
    const ComplexMatrix rho = random_density(d, r, rng);
    const auto ev = eigh(rho).values;
    std::size_t rank = 0;
    for (double v : ev) rank += v > 1e-10 ? 1 : 0;
    if (!is_psd(rho) || std::abs(oracle::trace_re(rho) - 1.0) > 1e-12 || rank != r) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("random_unitary") {
  const ComplexMatrix u1 = random_unitary(1, Seed{3});
  CHECK(std::abs(u1(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t d = 1; d <= 16; ++d) {
    const ComplexMatrix u = random_unitary(d, Seed{d});
    CHECK(oracle::identity_residual(oracle::matmul(oracle::dagger(u), u)) <= 1e-11);
  }
  CHECK(random_unitary(5, Seed{8}) == random_unitary(5, Seed{8}));
  Rng rng(Seed{6});
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix u = random_unitary(rng.uniform_int(1, 8), rng);
    if (std::abs(std::abs(oracle::det(u)) - 1.0) > 1e-9) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("rng streams are fixed by the seed") {
  Rng a(Seed{123});
  Rng b(Seed{123});
  for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());
  // First uniform of mt19937_64 seeded with 123, top 53 bits.
  std::mt19937_64 raw(123);
  Rng c(Seed{123});
  CHECK(c.uniform() == static_cast<double>(raw() >> 11) * 0x1.0p-53);
  double lo = 1.0, hi = 0.0;
  Rng d(Seed{1});
  for (int i = 0; i < 10000; ++i) {
    const double u = d.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
}
