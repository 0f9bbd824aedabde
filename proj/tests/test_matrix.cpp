// Copyright 2026 The troeq authors
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

#include <catch2/catch_amalgamated.hpp>

#include "troeq/matrix.hpp"
#include "troeq/rng.hpp"

using namespace troeq;

TEST_CASE("matrix product and adjoint basics") {
  const CMatrix e12 = CMatrix::unit(2, 2, 0, 1);
  const CMatrix e21 = CMatrix::unit(2, 2, 1, 0);
  const CMatrix p = e12 * e21;
  REQUIRE(p(0, 0) == cdouble{1.0, 0.0});
  REQUIRE(p(1, 1) == cdouble{0.0, 0.0});
  REQUIRE(fro_norm(e12.adjoint() - e21) == 0.0);

  CMatrix a(2, 3);
  a(0, 0) = {1.0, 2.0};
  a(1, 2) = {0.0, -1.0};
  const CMatrix aa = a.adjoint();
  REQUIRE(aa(0, 0) == cdouble{1.0, -2.0});
  REQUIRE(aa(2, 1) == cdouble{0.0, 1.0});
}

TEST_CASE("hs inner product is linear in the first slot") {
  const CMatrix a = CMatrix::unit(2, 2, 0, 0);
  const CMatrix b = CMatrix::unit(2, 2, 0, 0);
  REQUIRE(hs_inner(a * cdouble{0.0, 2.0}, b) == cdouble{0.0, 2.0});
  REQUIRE(hs_inner(a, b * cdouble{0.0, 2.0}) == cdouble{0.0, -2.0});
}

TEST_CASE("kron dimensions and entries") {
  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix e = CMatrix::unit(2, 2, 0, 1);
  const CMatrix k = kron(i2, e);
  REQUIRE(k.rows() == 4);
  REQUIRE(k(0, 1) == cdouble{1.0, 0.0});
  REQUIRE(k(2, 3) == cdouble{1.0, 0.0});
  REQUIRE(k(0, 3) == cdouble{0.0, 0.0});
}

TEST_CASE("shape errors") {
  const CMatrix a(2, 3);
  const CMatrix b(2, 2);
  REQUIRE_THROWS_AS(a * a, shape_error);
  REQUIRE_THROWS_AS(a + b, shape_error);
  REQUIRE_THROWS_AS(a.trace(), shape_error);
}

TEST_CASE("rng determinism") {
  Rng r1(42), r2(42);
  for (int i = 0; i < 100; ++i) REQUIRE(r1.gauss() == r2.gauss());
  Rng r3(43);
  REQUIRE(Rng(42).uniform() != r3.uniform());
}
