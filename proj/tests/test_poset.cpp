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
#include "unsharp/poset.hpp"

using namespace unsharp;
using testing::fig1;
using testing::names;
using testing::set;

namespace {

using N = std::set<std::string>;

}  // namespace

TEST_CASE("bounds on the nine-element order") {
  const auto &ea = fig1();
  const auto &p = ea.order();
  CHECK(names(ea, p.upper_bounds(set(ea, {"a", "b"}))) == N{"c'", "b'", "1"});
  CHECK(names(ea, p.upper_bounds(set(ea, {"1"}))) == N{"1"});
  CHECK(p.upper_bounds(ElementSet{}) == ea.carrier());
  CHECK(names(ea, p.lower_bounds(set(ea, {"b'", "c'"}))) == N{"0", "a", "b"});
  CHECK(names(ea, p.lower_bounds(set(ea, {"0"}))) == N{"0"});
  CHECK(p.lower_bounds(ElementSet{}) == ea.carrier());
}

TEST_CASE("maximal and minimal elements") {
  const auto &ea = fig1();
  const auto &p = ea.order();
  CHECK(names(ea, p.max_of(set(ea, {"0", "a", "b", "d"}))) == N{"a", "d"});
  CHECK(names(ea, p.min_of(p.upper_bounds(set(ea, {"a", "b'"})))) == N{"b'"});
  for (Element x = 0; x < ea.size(); ++x) {
    CHECK(p.max_of(ElementSet::singleton(x)) == ElementSet::singleton(x));
    CHECK(p.min_of(ElementSet::singleton(x)) == ElementSet::singleton(x));
  }
  CHECK(names(ea, p.max_of(set(ea, {"0", "1"}))) == N{"1"});
  CHECK(names(ea, p.min_of(set(ea, {"0", "1"}))) == N{"0"});
  CHECK_THROWS_AS(p.max_of(ElementSet{}), Error);
  CHECK_THROWS_AS(p.min_of(ElementSet{}), Error);
}

TEST_CASE("bounds and extremes agree with the oracle on every subset") {
  const auto &ea = fig1();
  const auto &p = ea.order();
  const auto alg = oracle::nine_element();
  for (std::uint64_t bits = 1; bits < (1U << 9); ++bits) {
    const auto s = ElementSet::from_bits(bits);
    const auto n = names(ea, s);
    CHECK(names(ea, p.upper_bounds(s)) == alg.upper(n));
    CHECK(names(ea, p.lower_bounds(s)) == alg.lower(n));
    CHECK(names(ea, p.max_of(s)) == alg.maximal(n));
    CHECK(names(ea, p.min_of(s)) == alg.minimal(n));
    CHECK(p.is_antichain(p.max_of(s)));
  }
}

TEST_CASE("set comparisons") {
  const auto &ea = fig1();
  const auto &p = ea.order();
  CHECK(p.leq1(set(ea, {"a"}), set(ea, {"a'", "b'"})));
  CHECK_FALSE(p.leq1(set(ea, {"1"}), set(ea, {"a"})));
  CHECK_FALSE(p.sqsub(set(ea, {"a", "d"}), set(ea, {"c"})));
  CHECK(p.sqsub(set(ea, {"a", "d"}), set(ea, {"b'"})));
  CHECK(p.leq2(set(ea, {"0"}), set(ea, {"a", "b"})));
  for (std::uint64_t bits = 1; bits < (1U << 9); bits += 7) {
    const auto s = ElementSet::from_bits(bits);
    CHECK(p.leq1(s, s));
    CHECK(p.leq2(s, s));
    CHECK(p.sqsub(s, s));
    CHECK(p.approx1(s, s));
    CHECK(p.approx2(s, s));
  }
  // {a, c} <=_1 {c'} fails (c is not below c') but {a, c} <=_2 {c'} holds.
  CHECK_FALSE(p.leq1(set(ea, {"a", "c"}), set(ea, {"c'"})));
  CHECK(p.leq2(set(ea, {"a", "c"}), set(ea, {"c'"})));
  CHECK(p.all_leq(set(ea, {"a", "b"}), set(ea, {"c'", "1"})));
  CHECK_FALSE(p.all_leq(set(ea, {"a", "c"}), set(ea, {"c'"})));
}

TEST_CASE("set comparisons agree with their definitions") {
  const auto &ea = fig1();
  const auto &p = ea.order();
  const auto alg = oracle::nine_element();
  auto some = [&](const N &a, const N &b, bool every_left) {
    const N &outer = every_left ? a : b;
    for (const auto &x : outer) {
      bool found = false;
      for (const auto &y : every_left ? b : a) found = found || (every_left ? alg.leq(x, y) : alg.leq(y, x));
      if (!found) return false;
    }
    return true;
  };
  for (std::uint64_t i = 1; i < 512; i += 5) {
    for (std::uint64_t j = 1; j < 512; j += 11) {
      const auto A = ElementSet::from_bits(i), B = ElementSet::from_bits(j);
      const auto a = names(ea, A), b = names(ea, B);
      CHECK(p.leq1(A, B) == some(a, b, true));
      CHECK(p.leq2(A, B) == some(a, b, false));
      bool any = false;
      for (const auto &x : a) {
        for (const auto &y : b) any = any || alg.leq(x, y);
      }
      CHECK(p.sqsub(A, B) == any);
    }
  }
}

TEST_CASE("from_relation validates the order") {
  // 0 < 1 < 2 chain.
  auto chain = Poset::from_relation(3, [](Element a, Element b) { return a <= b; });
  CHECK(chain.bottom() == 0);
  CHECK(chain.top() == 2);
  CHECK(chain.is_lattice());
  CHECK(chain.covers() == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Poset::from_relation(2, [](Element a, Element b) { return a == b; }), Error);  // no bounds
  CHECK_THROWS_AS(Poset::from_relation(2, [](Element, Element) { return true; }), Error);  // not antisymmetric
  CHECK_THROWS_AS(Poset::from_relation(2, [](Element a, Element b) { return a < b; }), Error);  // not reflexive
  // Not transitive: 0<=1, 1<=2 but not 0<=2.
  CHECK_THROWS_AS(Poset::from_relation(3,
                                       [](Element a, Element b) {
                                         return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
                                       }),
                  Error);
}

TEST_CASE("members outside the carrier are rejected") {
  const auto &p = fig1().order();
  CHECK_THROWS_AS(p.upper_bounds(ElementSet::singleton(20)), UnknownElement);
}

TEST_CASE("lattice detection") {
  CHECK_FALSE(fig1().is_lattice());
  CHECK(testing::algebra("boolean2.ea").is_lattice());
  CHECK(testing::algebra("boolean4.ea").is_lattice());
  CHECK(testing::algebra("chain3.ea").is_lattice());
}
