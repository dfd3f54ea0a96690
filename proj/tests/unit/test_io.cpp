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

#include <functional>
#include <string>

#include "stqf/errors.hpp"
#include "stqf/io.hpp"
#include "support.hpp"

namespace stqf {
namespace {

using io::Json;

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

TEST_CASE("round trips") {
  testing::Rng rng(59);
  for (GroupKind kind : testing::kAllKinds) {
    for (unsigned rank : {0u, 2u}) {
      const Semifield sf(kind, rank);
      CHECK(io::semifield_from_json(io::to_json(sf)) == sf);
      for (int k = 0; k < 40; ++k) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
        const QuadraticForm q = testing::random_form(rng, sf, n);
        CHECK(io::form_from_json(io::to_json(q)) == q);
        CHECK(io::form_from_json(io::parse_document(io::to_json(q).dump())) == q);

        const Vector x = testing::random_vector(rng, sf, n);
        CHECK(io::vector_from_json(io::to_json(sf, x), sf) == x);

        const SymmetricBilinearForm b = testing::random_companion(rng, q);
        CHECK(io::bilinear_from_json(io::to_json(b)) == b);

        const CompanionTable t = companion_table(q);
        CHECK(io::table_from_json(io::to_json(t)) == t);

        const GeneralMatrix m = testing::random_singular(rng, sf, n);
        CHECK(io::matrix_from_json(io::to_json(sf, m), sf) == m);
        const MonomialMatrix mono =
            *analyze_invertibility(testing::random_monomial(rng, sf, n)).monomial;
        CHECK(io::matrix_from_json(io::to_json(sf, mono), sf) == mono.to_general());

        const RationalQuadraticForm rq = testing::random_rational_form(rng, n);
        CHECK(io::rational_form_from_json(io::to_json(rq)) == rq);
      }
    }
  }
}

TEST_CASE("vector text") {
  const Semifield sf(GroupKind::Discrete);
  CHECK(io::parse_vector_text("t:1,t:0", sf) ==
        Vector({Element::tangible(Rational(1)), Element::tangible(Rational(0))}));
  CHECK(io::parse_vector_text("0, g:2", sf) == Vector({Element::zero(), Element::ghost(Rational(2))}));
  CHECK(where_of([&] { io::parse_vector_text("t:1,q", sf); }) == "coordinate 2");
}

TEST_CASE("error positions") {
  const Json bad_elem = Json::parse(
      R"({"semifield": {"group": "int"}, "n": 2, "diag": ["t:1", "t:x"]})");
  CHECK(where_of([&] { io::form_from_json(bad_elem); }) == "/diag/1");
  const Json bad_key = Json::parse(
      R"({"semifield": {"group": "int"}, "n": 2, "diag": ["t:1", "0"], "upper": {"2,1": "t:0"}})");
  CHECK(where_of([&] { io::form_from_json(bad_key); }) == "/upper/2,1");
  const Json bad_group = Json::parse(R"({"semifield": {"group": "reals"}, "diag": []})");
  CHECK(where_of([&] { io::form_from_json(bad_group); }) == "/semifield/group");
  const Json missing = Json::parse(R"({"semifield": {"group": "int"}})");
  CHECK(where_of([&] { io::form_from_json(missing); }) == "/");
  const Json wrong_n = Json::parse(R"({"semifield": {"group": "int"}, "n": 3, "diag": ["0"]})");
  CHECK(where_of([&] { io::form_from_json(wrong_n); }) == "/diag");
  const Json ragged = Json::parse(R"({"rows": [["t:0", "0"], ["0"]]})");
  CHECK(where_of([&] { io::matrix_from_json(ragged, Semifield()); }) == "/rows/1");
  const Json bad_kind = Json::parse(
      R"({"semifield": {"group": "int"}, "cells": [[{"kind": "interval"}]]})");
  CHECK(where_of([&] { io::table_from_json(bad_kind); }) == "/cells/0/0/kind");
  CHECK(where_of([] { io::parse_document("{\"a\": "); }).rfind("byte", 0) == 0);
  CHECK_THROWS_AS(io::form_from_json(Json::parse(R"({"semifield": {"group": "trivial"}, "diag": []})")),
                  PreconditionError);
}

TEST_CASE("semifield override") {
  const Json doc = Json::parse(R"({"diag": ["t:1/3"]})");
  const QuadraticForm q = io::form_from_json(doc, Semifield(GroupKind::DenseNonHalvable));
  CHECK(q.diag(0) == Element::tangible(Rational(1, 3)));
  CHECK_THROWS_AS(io::form_from_json(doc), ParseError);
}

TEST_CASE("companion set encoding") {
  const Semifield sf(GroupKind::Discrete);
  const Json j = io::to_json(CompanionSet::nu_leq(Rational(6)), sf);
  CHECK(j["kind"] == "nu_leq");
  CHECK(j["bound2"] == "6");
  CHECK(j["display"] == "[0, g:3]");
  CHECK(io::to_json(CompanionSet::nu_class(Rational(1)), sf)["exp"] == "1");
  CHECK(io::to_json(CompanionSet::singleton(Element::tangible(Rational(5))), sf)["value"] == "t:5");
}

}  // namespace
}  // namespace stqf
