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
#include "unsharp/formats.hpp"
#include "unsharp/frame_induction.hpp"

using namespace unsharp;
using testing::ex9_frame;
using testing::ex9_props;
using testing::fig1;

namespace {

using Pairs = std::vector<std::pair<TimePoint, TimePoint>>;

// R* straight from its definition, with the operators evaluated by the oracle.
std::set<std::pair<int, int>> oracle_star(const oracle::Algebra &alg, const oracle::Frame &f) {
  const auto &E = alg.carrier;
  const int n = f.size;
  std::set<std::pair<int, int>> alive;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) alive.insert({s, t});
  }
  std::vector<std::size_t> code(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<std::string> p;
    for (auto c : code) p.push_back(E[c]);
    const std::vector<std::vector<std::string>> fam{p};
    std::map<char, std::vector<oracle::Names>> v;
    for (char op : {'P', 'F', 'H', 'G'}) {
      for (int s = 0; s < n; ++s) v[op].push_back(oracle::tense(alg, f, op, fam, s));
    }
    auto all_leq = [&](const oracle::Names &a, const std::string &b) {
      for (const auto &x : a) {
        if (!alg.leq(x, b)) return false;
      }
      return true;
    };
    auto leq_all = [&](const std::string &a, const oracle::Names &b) {
      for (const auto &x : b) {
        if (!alg.leq(a, x)) return false;
      }
      return true;
    };
    for (auto it = alive.begin(); it != alive.end();) {
      const auto [s, t] = *it;
      const auto us = static_cast<std::size_t>(s), ut = static_cast<std::size_t>(t);
      const bool ok = all_leq(v['H'][ut], p[us]) && leq_all(p[us], v['P'][ut]) && all_leq(v['G'][us], p[ut]) &&
                      leq_all(p[ut], v['F'][us]);
      it = ok ? std::next(it) : alive.erase(it);
    }
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == E.size()) code[i++] = 0;
    if (i == code.size()) break;
  }
  return alive;
}

TimeFrame frame_of(std::size_t n, const Pairs &rel) {
  std::vector<std::string> times;
  for (std::size_t i = 0; i < n; ++i) times.push_back(std::to_string(i + 1));
  return TimeFrame(times, rel);
}

void all_pass(const Report &rep) {
  for (const auto &c : rep.checks()) {
    CAPTURE(c.id);
    CAPTURE(c.witness);
    CHECK(c.status == Status::kPass);
  }
}

}  // namespace

TEST_CASE("R* of the chain matches a brute-force oracle") {
  const auto &ea = fig1();
  const auto ops = OperatorTable::induced(ea, ex9_frame());
  const auto rel = induce_relation(ea, ops);
  CHECK_FALSE(rel.sampled);
  CHECK(rel.propositions == 729);
  oracle::Frame of{3, {}};
  for (auto [s, t] : ex9_frame().pairs()) of.rel.insert({static_cast<int>(s), static_cast<int>(t)});
  std::set<std::pair<int, int>> ours;
  for (auto [s, t] : rel.pairs) ours.insert({static_cast<int>(s), static_cast<int>(t)});
  CHECK(ours == oracle_star(oracle::nine_element(), of));
  CHECK(ours == of.rel);
}

TEST_CASE("R* of a cyclic frame matches the oracle") {
  const auto &ea = fig1();
  const auto f = frame_of(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto rel = induce_relation(ea, OperatorTable::induced(ea, f));
  oracle::Frame of{3, {{0, 1}, {1, 2}, {2, 0}}};
  std::set<std::pair<int, int>> ours;
  for (auto [s, t] : rel.pairs) ours.insert({static_cast<int>(s), static_cast<int>(t)});
  CHECK(ours == oracle_star(oracle::nine_element(), of));
  for (auto pr : of.rel) CHECK(ours.count(pr) == 1);
}

TEST_CASE("operators not coming from a frame") {
  const auto &ea = fig1();
  const auto ops = parse_ops(read_file(testing::data_path("exotic.ops")), ea);
  CHECK(ops.source() == nullptr);
  const auto rel = induce_relation(ea, ops);
  CHECK(rel.pairs.size() == 9);
  all_pass(check_induced_bounds(ea, ops));
  all_pass(check_extension(ea, ops));
}

TEST_CASE("single time point") {
  const auto &ea = fig1();
  const auto f = frame_of(1, {{0, 0}});
  const auto ops = OperatorTable::induced(ea, f);
  CHECK(induce_relation(ea, ops).pairs == Pairs{{0, 0}});
  all_pass(check_induced_equivalence(ea, f));
}

TEST_CASE("induced bounds and equivalence on the chain") {
  const auto &ea = fig1();
  all_pass(check_induced_bounds(ea, OperatorTable::induced(ea, ex9_frame())));
  const auto eq = check_induced_equivalence(ea, ex9_frame());
  all_pass(eq);
  CHECK(eq.find("induced.exact") != nullptr);
  CHECK(eq.find("induced.equiv-future-universal-2") != nullptr);
}

TEST_CASE("full relation is already maximal") {
  const auto &ea = testing::algebra("boolean4.ea");
  Pairs all;
  for (TimePoint s = 0; s < 3; ++s) {
    for (TimePoint t = 0; t < 3; ++t) all.push_back({s, t});
  }
  const auto f = frame_of(3, all);
  CHECK(induce_relation(ea, OperatorTable::induced(ea, f)).pairs.size() == 9);
  all_pass(check_induced_equivalence(ea, f));
}

TEST_CASE("two-point frames") {
  const auto &ea = fig1();
  CHECK_THROWS_AS(OperatorTable::induced(ea, frame_of(2, {{0, 1}})), FrameError);
  const auto swap = frame_of(2, {{0, 1}, {1, 0}});
  const auto eq = check_induced_equivalence(ea, swap);
  all_pass(eq);
  // R* need not be reflexive when R is not.
  const auto rel = induce_relation(ea, OperatorTable::induced(ea, swap));
  CHECK(rel.pairs.size() >= 2);
}

TEST_CASE("extended frame arithmetic") {
  const auto &ea = fig1();
  const auto ops = OperatorTable::induced(ea, ex9_frame());
  const auto rel = induce_relation(ea, ops);
  const ExtendedFrame ext(ops, rel);
  const auto &bar = ext.frame();
  CHECK(bar.size() == 9);
  CHECK(bar.pairs().size() == 6 + rel.pairs.size());
  for (TimePoint t = 0; t < 3; ++t) {
    CHECK(bar.related(ext.past(t), ext.present(t)));
    CHECK(bar.related(ext.present(t), ext.future(t)));
    CHECK(bar.name(ext.past(t)) == "(" + ex9_frame().name(t) + ",1)");
    CHECK(bar.name(ext.future(t)) == "(" + ex9_frame().name(t) + ",2)");
  }
  CHECK_FALSE(bar.serial());
}

TEST_CASE("selections for p over the chain") {
  const auto &ea = fig1();
  const auto ops = OperatorTable::induced(ea, ex9_frame());
  const ExtendedFrame ext(ops, induce_relation(ea, ops));
  const auto &p = ex9_props().get("p");
  const auto v = ops.apply_all(ea, p);
  std::uint64_t expected = 1;
  for (TimePoint t = 0; t < 3; ++t) expected *= v[0][t].size() * v[1][t].size();
  const auto sel = ext.selections(p, v[0], v[1]);
  CHECK(sel.size() == expected);
  for (const auto &q : sel) {
    for (TimePoint t = 0; t < 3; ++t) {
      CHECK(q[ext.present(t)] == p[t]);
      CHECK(v[0][t].contains(q[ext.past(t)]));
      CHECK(v[1][t].contains(q[ext.future(t)]));
      // Restricting the extended operators to T returns the chosen values.
      CHECK(tense_at(ea, ext.frame(), TenseOp::kP, {q}, ext.present(t)) == ElementSet::singleton(q[ext.past(t)]));
      CHECK(tense_at(ea, ext.frame(), TenseOp::kF, {q}, ext.present(t)) == ElementSet::singleton(q[ext.future(t)]));
    }
  }
}

TEST_CASE("extension checks") {
  const auto &ea = fig1();
  all_pass(check_extension(ea, OperatorTable::induced(ea, ex9_frame())));
  const auto &chain = testing::algebra("chain3.ea");
  const auto rep = check_extension(chain, OperatorTable::induced(chain, ex9_frame()));
  all_pass(rep);
  const auto *single = rep.find("extension.singleton-equality");
  REQUIRE(single != nullptr);
  CHECK(single->cases > 0);
}

TEST_CASE("constant top proposition") {
  const auto &ea = fig1();
  const auto ops = OperatorTable::induced(ea, ex9_frame());
  const Proposition one(3, ea.one());
  for (const auto &x : ops.apply_all(ea, one)) {
    for (auto s : x) CHECK(s == ElementSet::singleton(ea.one()));
  }
}

TEST_CASE("explicit operator tables") {
  const auto &ea = testing::algebra("chain3.ea");
  OperatorTable ops({"1", "2"});
  const Proposition p{ea.element("m"), ea.element("1")};
  ops.set(TenseOp::kH, p, 0, ElementSet::singleton(ea.zero()));
  CHECK_THROWS_AS(ops.check_total(ea), FrameError);
  CHECK_THROWS_AS(ops.apply(ea, TenseOp::kG, p), FrameError);
  for (auto op : kTenseOps) {
    for (TimePoint t = 0; t < 2; ++t) ops.set_default(op, t, ElementSet::singleton(ea.one()));
  }
  CHECK_NOTHROW(ops.check_total(ea));
  CHECK(ops.apply(ea, TenseOp::kH, p)[0] == ElementSet::singleton(ea.zero()));
  CHECK(ops.apply(ea, TenseOp::kH, p)[1] == ElementSet::singleton(ea.one()));
}
