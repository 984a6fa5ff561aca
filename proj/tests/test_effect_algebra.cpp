// Copyright 2026 The unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "common.hpp"
#include "oracle.hpp"
#include "unsharp/effect_algebra.hpp"
#include "unsharp/random_algebra.hpp"

using namespace unsharp;
using testing::el;
using testing::fig1;
using testing::names;
using testing::set;

namespace {

RawAlgebra boolean2() {
  RawAlgebra r;
  r.names = {"0", "1"};
  r.plus = {{0, 1}, {1, std::nullopt}};
  r.zero = 0;
  r.one = 1;
  return r;
}

std::optional<Axiom> rejected_by(const RawAlgebra &raw) {
  auto v = verify_axioms(raw);
  if (auto *bad = std::get_if<AxiomViolation>(&v)) return bad->axiom;
  return std::nullopt;
}

}  // namespace

TEST_CASE("the nine-element table is an effect algebra") {
  const auto &ea = fig1();
  CHECK(ea.size() == 9);
  CHECK(ea.name(ea.zero()) == "0");
  CHECK(ea.name(ea.one()) == "1");
  const std::vector<std::pair<const char *, const char *>> sup = {{"0", "1"},  {"a", "a'"}, {"b", "b'"},
                                                                  {"c", "c'"}, {"d", "d"},  {"c'", "c"},
                                                                  {"b'", "b"}, {"a'", "a"}, {"1", "0"}};
  for (auto [x, y] : sup) CHECK(ea.name(ea.supplement(el(ea, x))) == y);
  CHECK_FALSE(ea.is_lattice());
}

TEST_CASE("two-element Boolean algebra") {
  auto v = verify_axioms(boolean2());
  REQUIRE(std::holds_alternative<EffectAlgebra>(v));
  const auto &ea = std::get<EffectAlgebra>(v);
  CHECK(ea.supplement(0) == 1);
  CHECK(ea.is_lattice());
}

TEST_CASE("single-cell mutation of the nine-element table is rejected") {
  auto raw = fig1().raw();
  raw.plus[el(fig1(), "a")][el(fig1(), "b")] = el(fig1(), "b'");
  CHECK(rejected_by(raw).has_value());
}

TEST_CASE("axiom violations are named") {
  SUBCASE("E1") {
    auto r = boolean2();
    r.plus[1][0] = std::nullopt;
    CHECK(rejected_by(r) == Axiom::kE1);
  }
  SUBCASE("E3 without a supplement") {
    RawAlgebra r;
    r.names = {"0", "m", "1"};
    r.plus = {{0, 1, 2}, {1, std::nullopt, std::nullopt}, {2, std::nullopt, std::nullopt}};
    r.zero = 0;
    r.one = 2;
    CHECK(rejected_by(r) == Axiom::kE3);
  }
  SUBCASE("E4") {
    auto r = boolean2();
    r.plus[1][1] = 1;
    CHECK(rejected_by(r).has_value());
  }
  SUBCASE("E2") {
    RawAlgebra r;
    r.names = {"0", "x", "y", "1"};
    r.zero = 0;
    r.one = 3;
    r.plus = {{0, 1, 2, 3}, {1, 0, 0, std::nullopt}, {2, 0, 0, std::nullopt}, {3, std::nullopt, std::nullopt, std::nullopt}};
    CHECK(rejected_by(r) == Axiom::kE2);
  }
  SUBCASE("E3 after a rewired chain") {
    // With x + x = 1 and x + y gone, y is left without a supplement.
    RawAlgebra r;
    r.names = {"0", "x", "y", "1"};
    r.zero = 0;
    r.one = 3;
    r.plus = {{0, 1, 2, 3},
              {1, 2, 3, std::nullopt},
              {2, 3, std::nullopt, std::nullopt},
              {3, std::nullopt, std::nullopt, std::nullopt}};
    CHECK_FALSE(rejected_by(r).has_value());
    r.plus[1][1] = 3;
    r.plus[1][2] = std::nullopt;
    r.plus[2][1] = std::nullopt;
    CHECK(rejected_by(r) == Axiom::kE3);
  }
  SUBCASE("supplement transcription mismatch") {
    auto r = fig1().raw();
    (*r.supplement)[el(fig1(), "d")] = el(fig1(), "c");
    CHECK(rejected_by(r) == Axiom::kSupplement);
  }
}

TEST_CASE("structural problems throw instead of reporting an axiom") {
  auto r = boolean2();
  r.plus.pop_back();
  CHECK_THROWS_AS(verify_axioms(r), Error);
  RawAlgebra empty;
  CHECK_THROWS_AS(verify_axioms(empty), Error);
  auto dup = boolean2();
  dup.names = {"0", "0"};
  CHECK_THROWS_AS(verify_axioms(dup), Error);
  auto range = boolean2();
  range.plus[0][1] = 7;
  CHECK_THROWS_AS(verify_axioms(range), Error);
  CHECK_THROWS_AS(EffectAlgebra::from_raw([] {
                    auto b = boolean2();
                    b.plus[1][0] = std::nullopt;
                    return b;
                  }()),
                  AxiomError);
}

TEST_CASE("induced order, orthogonality and the product") {
  const auto &ea = fig1();
  CHECK(induced_leq(ea, el(ea, "a"), el(ea, "c'")));
  CHECK_FALSE(induced_leq(ea, el(ea, "a"), el(ea, "d")));
  for (Element x = 0; x < ea.size(); ++x) {
    CHECK(induced_leq(ea, x, x));
    CHECK(ea.orthogonal(x, ea.supplement(x)));
    CHECK(ea.odot(x, ea.one()) == x);
  }
  CHECK(ea.orthogonal(el(ea, "a"), el(ea, "b")));
  CHECK_FALSE(ea.orthogonal(el(ea, "a"), el(ea, "a")));
  CHECK(ea.odot(el(ea, "b'"), el(ea, "d")) == el(ea, "b"));
  CHECK(ea.odot(el(ea, "c'"), el(ea, "b'")) == el(ea, "a"));
  CHECK_THROWS_AS(ea.element("zz"), UnknownElement);
}

TEST_CASE("order and product agree with the oracle") {
  const auto &ea = fig1();
  const auto alg = oracle::nine_element();
  for (Element a = 0; a < ea.size(); ++a) {
    CHECK(ea.name(ea.supplement(a)) == alg.supplement(ea.name(a)));
    for (Element b = 0; b < ea.size(); ++b) {
      CHECK(ea.leq(a, b) == alg.leq(ea.name(a), ea.name(b)));
      const auto p = ea.odot(a, b);
      const auto q = alg.odot(ea.name(a), ea.name(b));
      CHECK(p.has_value() == q.has_value());
      if (p && q) CHECK(ea.name(*p) == *q);
    }
  }
}

TEST_CASE("set-lifted partial operations") {
  const auto &ea = fig1();
  CHECK_FALSE(ea.plus_set(set(ea, {"a"}), set(ea, {"b", "d"})).has_value());
  const auto A = set(ea, {"a", "c", "d"});
  CHECK(ea.plus_set(set(ea, {"0"}), A) == A);
  CHECK(ea.odot_set(set(ea, {"a", "b"}), set(ea, {"1"})) == set(ea, {"a", "b"}));
  CHECK(ea.plus_set(set(ea, {"a"}), set(ea, {"b", "c"})) == set(ea, {"c'", "b'"}));
}

TEST_CASE("basic laws hold on the fixtures") {
  for (const char *f : {"fig1.ea", "boolean2.ea", "boolean4.ea", "chain3.ea"}) {
    CAPTURE(f);
    const auto rep = check_basic_laws(testing::algebra(f));
    CHECK(rep.ok());
    CHECK(rep.count(Status::kPass) == rep.checks().size());
  }
}

TEST_CASE("random effect algebras") {
  const auto algebras = random_effect_algebras(100, 7);
  REQUIRE(algebras.size() == 100);
  std::size_t non_lattices = 0;
  for (const auto &ea : algebras) {
    CHECK(ea.size() <= 8);
    CHECK(check_basic_laws(ea).ok());
    if (!ea.is_lattice()) ++non_lattices;
  }
  MESSAGE(non_lattices << " of 100 generated algebras are not lattices");
  const auto again = random_effect_algebras(100, 7);
  for (std::size_t i = 0; i < algebras.size(); ++i) CHECK(again[i].names() == algebras[i].names());
}
