// Copyright 2026 The stqf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "stqf/errors.hpp"
#include "stqf/linalg.hpp"
#include "support.hpp"

namespace stqf {
namespace {

Element t(long e) { return Element::tangible(Rational(e)); }
Element g(long e) { return Element::ghost(Rational(e)); }
const Element kO = Element::zero();

TEST_CASE("matrix product") {
  const GeneralMatrix a({{t(1)}});
  const GeneralMatrix b({{t(2)}});
  CHECK(mat_mul(a, b) == GeneralMatrix({{t(3)}}));
  const GeneralMatrix m({{t(1), g(0)}, {kO, t(-2)}});
  CHECK(mat_mul(m, GeneralMatrix::identity(2)) == m);
  CHECK(mat_mul(GeneralMatrix::identity(2), m) == m);
  CHECK_THROWS_AS(mat_mul(m, GeneralMatrix(3, 1)), ShapeError);
  CHECK_THROWS_AS(GeneralMatrix({{t(1)}, {t(1), t(2)}}), ShapeError);
}

TEST_CASE("invertibility examples") {
  CHECK(is_invertible(GeneralMatrix({{t(2), kO}, {kO, t(-1)}})));
  CHECK_FALSE(is_invertible(GeneralMatrix({{t(0), t(0)}, {kO, t(0)}})));
  CHECK_FALSE(is_invertible(GeneralMatrix({{g(0), kO}, {kO, t(0)}})));
  CHECK_THROWS_AS(is_invertible(GeneralMatrix(2, 3)), ShapeError);

  const InvertibilityReport r = analyze_invertibility(GeneralMatrix({{t(0), t(0)}, {kO, t(0)}}));
  CHECK_FALSE(r.invertible());
  REQUIRE(r.row.has_value());
  CHECK(*r.row == 0);
  const InvertibilityReport ghost = analyze_invertibility(GeneralMatrix({{g(0), kO}, {kO, t(0)}}));
  REQUIRE(ghost.column.has_value());
  CHECK(*ghost.column == 0);
}

TEST_CASE("inversion examples") {
  CHECK(invert(MonomialMatrix::identity(3)) == MonomialMatrix::identity(3));
  CHECK(invert(MonomialMatrix::diagonal({t(2), t(-1)})) == MonomialMatrix::diagonal({t(-2), t(1)}));
  const MonomialMatrix swap({1, 0}, {t(1), t(0)});
  const MonomialMatrix inv = invert(swap);
  CHECK(inv == MonomialMatrix({1, 0}, {t(0), t(-1)}));
  CHECK(mat_mul(swap.to_general(), inv.to_general()) == GeneralMatrix::identity(2));
  CHECK_THROWS_AS(MonomialMatrix({0, 0}, {t(0), t(0)}), ShapeError);
  CHECK_THROWS_AS(MonomialMatrix({0, 1}, {t(0), g(0)}), PreconditionError);
  CHECK_THROWS_AS(MonomialMatrix({0, 1}, {t(0), kO}), PreconditionError);
}

TEST_CASE("random monomial matrices invert both ways") {
  testing::Rng rng(3);
  for (GroupKind kind : testing::kAllKinds) {
    const Semifield sf(kind, 1);
    for (int k = 0; k < 60; ++k) {
      const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
      const GeneralMatrix m = testing::random_monomial(rng, sf, n);
      const InvertibilityReport r = analyze_invertibility(m);
      REQUIRE(r.invertible());
      CHECK(r.monomial->to_general() == m);
      const GeneralMatrix inv = invert(*r.monomial).to_general();
      CHECK(mat_mul(m, inv) == GeneralMatrix::identity(n));
      CHECK(mat_mul(inv, m) == GeneralMatrix::identity(n));
      CHECK(testing::brute_force_inverse(m) == inv);
    }
  }
}

TEST_CASE("singular matrices agree with exhaustive search") {
  testing::Rng rng(5);
  for (GroupKind kind : testing::kAllKinds) {
    const Semifield sf(kind, 1);
    for (int k = 0; k < 60; ++k) {
      const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
      const GeneralMatrix m = testing::random_singular(rng, sf, n);
      CHECK_FALSE(is_invertible(m));
      CHECK_FALSE(testing::brute_force_inverse(m).has_value());
    }
  }
}

TEST_CASE("composition acts on vectors") {
  testing::Rng rng(9);
  const Semifield sf(GroupKind::DenseNonHalvable, 1);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const GeneralMatrix a = testing::random_monomial(rng, sf, n);
    const GeneralMatrix b = testing::random_monomial(rng, sf, n);
    const MonomialMatrix ma = *analyze_invertibility(a).monomial;
    const MonomialMatrix mb = *analyze_invertibility(b).monomial;
    CHECK(compose(ma, mb).to_general() == mat_mul(a, b));
    CHECK(compose(ma, invert(ma)) == MonomialMatrix::identity(n));
  }
}

}  // namespace
}  // namespace stqf
