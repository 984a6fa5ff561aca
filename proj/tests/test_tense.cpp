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

#include <random>

#include "common.hpp"
#include "oracle.hpp"
#include "unsharp/connectives.hpp"
#include "unsharp/tense.hpp"

using namespace unsharp;
using testing::ex9_frame;
using testing::ex9_props;
using testing::fig1;
using testing::prop;
using testing::set;
using testing::setprop;

namespace {

const Proposition &p9() { return ex9_props().get("p"); }
const Proposition &q9() { return ex9_props().get("q"); }

TimeFrame frame_of(std::size_t n, const std::vector<std::pair<TimePoint, TimePoint>> &rel) {
  std::vector<std::string> times;
  for (std::size_t i = 0; i < n; ++i) times.push_back(std::to_string(i + 1));
  return TimeFrame(times, rel);
}

Proposition constant(Element v, std::size_t n) { return Proposition(n, v); }

std::vector<std::string> names_of(const EffectAlgebra &ea, const Proposition &p) {
  std::vector<std::string> out;
  for (auto e : p) out.push_back(ea.name(e));
  return out;
}

}  // namespace

TEST_CASE("frame construction") {
  const auto &f = ex9_frame();
  CHECK(f.size() == 3);
  CHECK(f.serial());
  CHECK(f.reflexive());
  CHECK(f.pairs().size() == 6);
  CHECK(f.related(0, 2));
  CHECK_FALSE(f.related(2, 0));
  CHECK(f.index("2") == 1);
  CHECK_THROWS_AS(f.index("7"), FrameError);
  CHECK_THROWS_AS(frame_of(2, {}), FrameError);
  CHECK_THROWS_AS(TimeFrame({"1", "1"}, {{0, 0}}), FrameError);
  CHECK_FALSE(frame_of(2, {{0, 1}}).serial());
  CHECK(frame_of(2, {{0, 1}, {1, 0}}).serial());
  CHECK_FALSE(frame_of(2, {{0, 1}, {1, 0}}).reflexive());
}

TEST_CASE("tense operators on the three-point chain") {
  const auto &ea = fig1();
  const auto &f = ex9_frame();
  CHECK(tense_apply(ea, f, TenseOp::kG, p9()) == setprop(ea, {{"b"}, {"b"}, {"a'"}}));
  CHECK(tense_apply(ea, f, TenseOp::kH, q9()) == setprop(ea, {{"b'"}, {"b'"}, {"a", "b"}}));
  const auto one = constant(ea.one(), 3);
  CHECK(tense_apply(ea, f, TenseOp::kG, one) == lift(one));
  CHECK(tense_apply(ea, f, TenseOp::kH, one) == lift(one));
}

TEST_CASE("tense operators agree with the oracle over families") {
  const auto &ea = fig1();
  const auto alg = oracle::nine_element();
  std::mt19937_64 gen(11);
  const std::vector<std::vector<std::pair<TimePoint, TimePoint>>> relations = {
      {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}},
      {{0, 1}, {1, 2}, {2, 0}},
      {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}},
      {{0, 1}, {1, 0}, {2, 2}, {0, 2}},
  };
  for (const auto &rel : relations) {
    const auto f = frame_of(3, rel);
    REQUIRE(f.serial());
    oracle::Frame of{3, {}};
    for (auto [s, t] : rel) of.rel.insert({static_cast<int>(s), static_cast<int>(t)});
    for (int trial = 0; trial < 60; ++trial) {
      PropositionFamily family;
      std::vector<std::vector<std::string>> named;
      const std::size_t members = 1 + gen() % 3;
      for (std::size_t m = 0; m < members; ++m) {
        Proposition p;
        for (int t = 0; t < 3; ++t) p.push_back(gen() % ea.size());
        family.push_back(p);
        named.push_back(names_of(ea, p));
      }
      for (auto op : kTenseOps) {
        const auto got = tense_apply(ea, f, op, family);
        for (int s = 0; s < 3; ++s) {
          CHECK(testing::names(ea, got[static_cast<std::size_t>(s)]) == oracle::tense(alg, of, to_char(op), named, s));
          CHECK(got[static_cast<std::size_t>(s)] == tense_at(ea, f, op, family, static_cast<TimePoint>(s)));
        }
      }
    }
  }
}

TEST_CASE("phi enumerates selections") {
  const auto &ea = fig1();
  const auto two = setprop(ea, {{"a", "b"}, {"c"}});
  const auto fam = phi(two);
  REQUIRE(fam.size() == 2);
  CHECK(std::find(fam.begin(), fam.end(), prop(ea, {"a", "c"})) != fam.end());
  CHECK(std::find(fam.begin(), fam.end(), prop(ea, {"b", "c"})) != fam.end());
  CHECK(phi(lift(p9())) == PropositionFamily{p9()});
  const auto imp = pointwise(ea, PointwiseOp::kImpDouble, lift(p9()), lift(q9()));
  CHECK(imp == setprop(ea, {{"b'", "c'"}, {"a'", "b'"}, {"c'"}}));
  CHECK(phi(imp).size() == 4);
  CHECK_THROWS_AS(phi(setprop(ea, {{"a", "b"}, {"a", "b"}, {"a", "b"}}), 4), CapExceeded);
}

TEST_CASE("phi agrees with the oracle") {
  const auto &ea = fig1();
  const auto x = setprop(ea, {{"a", "b", "c"}, {"d"}, {"c'", "1"}});
  std::vector<oracle::Names> named;
  for (auto s : x) named.push_back(testing::names(ea, s));
  std::set<std::vector<std::string>> ours, theirs;
  for (const auto &p : phi(x)) ours.insert(names_of(ea, p));
  for (const auto &p : oracle::phi(named)) theirs.insert(p);
  CHECK(ours == theirs);
}

TEST_CASE("pointwise connectives") {
  const auto &ea = fig1();
  const auto p = lift(p9());
  const auto q = lift(q9());
  CHECK(pointwise(ea, PointwiseOp::kOtimes, p, q) == setprop(ea, {{"c"}, {"a"}, {"b"}}));
  CHECK(pointwise(ea, PointwiseOp::kImpDouble, q, p) == setprop(ea, {{"d", "a'"}, {"d", "c'"}, {"a'"}}));
  CHECK(pointwise(ea, PointwiseOp::kOtimes, p, lift(constant(ea.one(), 3))) == p);
  try {
    pointwise(ea, PointwiseOp::kPlus, p, q);
    FAIL("expected UndefinedAt");
  } catch (const UndefinedAt &e) {
    CHECK(e.time() == 0);
  }
}

TEST_CASE("the tense values behind the compatibility remarks") {
  const auto &ea = fig1();
  const auto &f = ex9_frame();
  const auto imp = pointwise(ea, PointwiseOp::kImpDouble, lift(p9()), lift(q9()));
  CHECK(apply_phi(ea, f, TenseOp::kG, imp) == setprop(ea, {{"b"}, {"b"}, {"c'"}}));
  CHECK(tense_of_union(ea, f, TenseOp::kG, imp) == apply_phi(ea, f, TenseOp::kG, imp));
  const auto gg = pointwise(ea, PointwiseOp::kImpDouble, tense_apply(ea, f, TenseOp::kG, p9()),
                            tense_apply(ea, f, TenseOp::kG, q9()));
  // The t = 2 cell is printed as {b,1} in the reference table; see README.md.
  CHECK(gg == setprop(ea, {{"b'", "1"}, {"b'", "1"}, {"c'"}}));
  CHECK(holds_pointwise(ea.order(), SetRelation::kSqsub, apply_phi(ea, f, TenseOp::kG, imp), gg));
  const auto hh = pointwise(ea, PointwiseOp::kOtimes, tense_apply(ea, f, TenseOp::kH, p9()),
                            tense_apply(ea, f, TenseOp::kH, q9()));
  CHECK(hh == setprop(ea, {{"c"}, {"0"}, {"0"}}));
  const auto pq = pointwise(ea, PointwiseOp::kOtimes, lift(p9()), lift(q9()));
  CHECK(apply_phi(ea, f, TenseOp::kH, pq) == hh);
}

TEST_CASE("composition") {
  const auto &ea = fig1();
  const auto &f = ex9_frame();
  const auto p = lift(p9());
  const auto gp = compose(ea, f, TenseOp::kG, TenseOp::kP, {p9()});
  const auto hf = compose(ea, f, TenseOp::kH, TenseOp::kF, {p9()});
  CHECK(holds_pointwise(ea.order(), SetRelation::kLeq1, p, gp));
  CHECK(holds_pointwise(ea.order(), SetRelation::kLeq1, p, hf));
  const auto one = constant(ea.one(), 3);
  for (auto x : {TenseOp::kH, TenseOp::kG}) {
    for (auto y : {TenseOp::kH, TenseOp::kG}) CHECK(compose(ea, f, x, y, {one, one}) == lift(one));
  }
}

TEST_CASE("non-serial frames are rejected") {
  const auto &ea = fig1();
  const auto f = frame_of(2, {{0, 1}});
  CHECK_THROWS_AS(tense_apply(ea, f, TenseOp::kG, constant(ea.one(), 2)), FrameError);
  CHECK_THROWS_AS(check_dynamic_axioms(ea, f), FrameError);
}

TEST_CASE("degenerate frames") {
  const auto &ea = fig1();
  const auto single = frame_of(1, {{0, 0}});
  for (Element v = 0; v < ea.size(); ++v) {
    CHECK(tense_apply(ea, single, TenseOp::kH, Proposition{v})[0] == ElementSet::singleton(v));
  }
  CHECK(check_dynamic_axioms(ea, single).ok());
  const auto full = frame_of(3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  const auto p = p9();
  const auto h = tense_apply(ea, full, TenseOp::kH, p);
  ElementSet range;
  for (auto v : p) range.insert(v);
  const auto expected = ea.order().max_of(ea.order().lower_bounds(range));
  for (auto s : h) CHECK(s == expected);
  CHECK(check_dynamic_axioms(ea, full).ok());
}

TEST_CASE("dynamic axioms and tense laws on the chain") {
  const auto &ea = fig1();
  const auto dyn = check_dynamic_axioms(ea, ex9_frame());
  for (const auto &c : dyn.checks()) {
    CAPTURE(c.id);
    CHECK(c.status == Status::kPass);
    CHECK_FALSE(c.sampled);
  }
  CHECK(dyn.find("dynamic.round-trip") != nullptr);
  const auto laws = check_tense_laws(ea, ex9_frame());
  for (const auto &c : laws.checks()) {
    CAPTURE(c.id);
    CHECK(c.status == Status::kPass);
  }
  CHECK(laws.find("tense.reflexive-bounds") != nullptr);
}

TEST_CASE("reflexive bounds are skipped for non-reflexive frames") {
  const auto &ea = testing::algebra("chain3.ea");
  const auto f = frame_of(2, {{0, 1}, {1, 0}});
  const auto laws = check_tense_laws(ea, f);
  const auto *c = laws.find("tense.reflexive-bounds");
  REQUIRE(c != nullptr);
  CHECK(c->status == Status::kHypothesisFailed);
  CHECK(laws.count(Status::kFail) == 0);
}

TEST_CASE("compatibility on the chain") {
  const auto &ea = fig1();
  const std::vector<Proposition> only = {p9(), q9()};
  SweepOptions opts;
  opts.exhaustive_limit = 2000;
  opts.sample_size = 2000;
  const auto rep = check_compatibility(ea, ex9_frame(), opts, &only);
  CHECK(rep.checks().size() == 64);
  CHECK(rep.count(Status::kFail) == 0);
  const auto *hhp = rep.find("compat.otimes.HHP");
  REQUIRE(hhp != nullptr);
  CHECK(hhp->status == Status::kPass);
}

TEST_CASE("results do not depend on the thread count") {
  const auto &ea = fig1();
  SweepOptions one;
  SweepOptions four;
  four.jobs = 4;
  const auto a = check_dynamic_axioms(ea, ex9_frame(), one);
  const auto b = check_dynamic_axioms(ea, ex9_frame(), four);
  REQUIRE(a.checks().size() == b.checks().size());
  for (std::size_t i = 0; i < a.checks().size(); ++i) {
    CHECK(a.checks()[i].id == b.checks()[i].id);
    CHECK(a.checks()[i].status == b.checks()[i].status);
    CHECK(a.checks()[i].cases == b.checks()[i].cases);
    CHECK(a.checks()[i].witness == b.checks()[i].witness);
  }
  const std::vector<Proposition> only = {p9(), q9()};
  const auto c1 = check_compatibility(ea, ex9_frame(), one, &only);
  const auto c4 = check_compatibility(ea, ex9_frame(), four, &only);
  REQUIRE(c1.checks().size() == c4.checks().size());
  for (std::size_t i = 0; i < c1.checks().size(); ++i) {
    CHECK(c1.checks()[i].status == c4.checks()[i].status);
    CHECK(c1.checks()[i].witness == c4.checks()[i].witness);
  }
}

TEST_CASE("proposition indexing round-trips") {
  const auto &ea = fig1();
  CHECK(proposition_count(ea, 3) == 729U);
  CHECK_FALSE(proposition_count(ea, 40).has_value());
  for (std::uint64_t i = 0; i < 729; i += 37) CHECK(proposition_index(ea, proposition_at(ea, 3, i)) == i);
}
