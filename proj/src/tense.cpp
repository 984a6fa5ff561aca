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

#include "unsharp/tense.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "unsharp/connectives.hpp"
#include "unsharp/format.hpp"
#include "detail.hpp"

namespace unsharp {

char to_char(TenseOp op) {
  switch (op) {
    case TenseOp::kP:
      return 'P';
    case TenseOp::kF:
      return 'F';
    case TenseOp::kH:
      return 'H';
    case TenseOp::kG:
      return 'G';
  }
  return '?';
}

std::optional<TenseOp> tense_op_from_char(char c) {
  switch (c) {
    case 'P':
      return TenseOp::kP;
    case 'F':
      return TenseOp::kF;
    case 'H':
      return TenseOp::kH;
    case 'G':
      return TenseOp::kG;
    default:
      return std::nullopt;
  }
}

TimeFrame::TimeFrame(std::vector<std::string> times, const std::vector<std::pair<TimePoint, TimePoint>> &rel)
    : names_(std::move(times)) {
  if (names_.empty()) throw FrameError("time set is empty");
  if (names_.size() > 64) throw FrameError("at most 64 time points are supported");
  std::set<std::string> seen;
  for (const auto &n : names_) {
    if (!seen.insert(n).second) throw FrameError("duplicate time point '" + n + "'");
  }
  if (rel.empty()) throw FrameError("time-preference relation is empty");
  before_.assign(names_.size(), TimeSet{});
  after_.assign(names_.size(), TimeSet{});
  for (auto [s, t] : rel) {
    if (s >= names_.size() || t >= names_.size()) throw FrameError("relation refers to an unknown time point");
    after_[s].insert(t);
    before_[t].insert(s);
  }
}

TimePoint TimeFrame::index(std::string_view name) const {
  for (TimePoint t = 0; t < names_.size(); ++t) {
    if (names_[t] == name) return t;
  }
  throw FrameError("unknown time point '" + std::string(name) + "'");
}

std::vector<std::pair<TimePoint, TimePoint>> TimeFrame::pairs() const {
  std::vector<std::pair<TimePoint, TimePoint>> out;
  for (TimePoint s = 0; s < size(); ++s) {
    for (TimePoint t : after_[s]) out.emplace_back(s, t);
  }
  return out;
}

bool TimeFrame::serial() const {
  for (TimePoint s = 0; s < size(); ++s) {
    if (before_[s].empty() || after_[s].empty()) return false;
  }
  return true;
}

bool TimeFrame::reflexive() const {
  for (TimePoint s = 0; s < size(); ++s) {
    if (!after_[s].contains(s)) return false;
  }
  return true;
}

namespace {

bool looks_back(TenseOp op) { return op == TenseOp::kP || op == TenseOp::kH; }
bool is_existential(TenseOp op) { return op == TenseOp::kP || op == TenseOp::kF; }

ElementSet bound_of(const EffectAlgebra &ea, TenseOp op, ElementSet collected) {
  const auto &ord = ea.order();
  return is_existential(op) ? ord.min_of(ord.upper_bounds(collected)) : ord.max_of(ord.lower_bounds(collected));
}

TimeSet segment(const TimeFrame &frame, TenseOp op, TimePoint s) {
  return looks_back(op) ? frame.before(s) : frame.after(s);
}

void require_serial(const TimeFrame &frame) {
  if (!frame.serial()) throw FrameError("time frame is not serial");
}

void require_length(const TimeFrame &frame, std::size_t len) {
  if (len != frame.size()) throw FrameError("proposition length does not match the number of time points");
}

}  // namespace

ElementSet tense_at(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const PropositionFamily &family,
                    TimePoint s) {
  ElementSet collected;
  const TimeSet seg = segment(frame, op, s);
  for (const auto &q : family) {
    require_length(frame, q.size());
    for (TimePoint t : seg) collected.insert(q[t]);
  }
  if (collected.empty()) {
    throw FrameError(std::string("nothing to collect for ") + to_char(op) + " at time " + frame.name(s));
  }
  return bound_of(ea, op, collected);
}

SetProposition tense_apply(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op,
                           const PropositionFamily &family) {
  require_serial(frame);
  if (family.empty()) throw Error("proposition family is empty");
  SetProposition out(frame.size());
  for (TimePoint s = 0; s < frame.size(); ++s) out[s] = tense_at(ea, frame, op, family, s);
  return out;
}

SetProposition tense_apply(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const Proposition &p) {
  return tense_apply(ea, frame, op, PropositionFamily{p});
}

SetProposition tense_of_union(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op,
                              const SetProposition &x) {
  require_serial(frame);
  require_length(frame, x.size());
  SetProposition out(frame.size());
  for (TimePoint s = 0; s < frame.size(); ++s) {
    ElementSet collected;
    for (TimePoint t : segment(frame, op, s)) collected |= x[t];
    out[s] = bound_of(ea, op, collected);
  }
  return out;
}

PropositionFamily phi(const SetProposition &x, std::uint64_t cap) {
  std::vector<std::uint64_t> radix;
  for (ElementSet s : x) {
    if (s.empty()) throw Error("phi: set proposition has an empty value");
    radix.push_back(s.size());
  }
  const auto total = domain_size(radix);
  if (!total || *total > cap) throw CapExceeded("phi would produce more than " + std::to_string(cap) + " propositions");
  std::vector<std::vector<Element>> choices;
  for (ElementSet s : x) choices.emplace_back(s.begin(), s.end());
  PropositionFamily out;
  out.reserve(*total);
  std::vector<std::size_t> pos(x.size(), 0);
  for (std::uint64_t k = 0; k < *total; ++k) {
    Proposition q(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) q[t] = choices[t][pos[t]];
    out.push_back(std::move(q));
    for (std::size_t t = x.size(); t-- > 0;) {
      if (++pos[t] < choices[t].size()) break;
      pos[t] = 0;
    }
  }
  return out;
}

SetProposition apply_phi(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const SetProposition &x,
                         std::uint64_t cap) {
  return tense_apply(ea, frame, op, phi(x, cap));
}

SetProposition compose(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp outer, TenseOp inner,
                       const PropositionFamily &family, std::uint64_t cap) {
  return apply_phi(ea, frame, outer, tense_apply(ea, frame, inner, family), cap);
}

SetProposition pointwise(const EffectAlgebra &ea, PointwiseOp op, const SetProposition &x,
                         const SetProposition &y) {
  if (x.size() != y.size()) throw Error("pointwise operation on propositions of different length");
  SetProposition out(x.size());
  for (TimePoint t = 0; t < x.size(); ++t) {
    switch (op) {
      case PointwiseOp::kOtimes:
        out[t] = otimes_set(ea, x[t], y[t]);
        break;
      case PointwiseOp::kImpDouble:
        out[t] = imp_double_set(ea, x[t], y[t]);
        break;
      case PointwiseOp::kOdot:
      case PointwiseOp::kPlus: {
        const bool is_plus = op == PointwiseOp::kPlus;
        const auto r = is_plus ? ea.plus_set(x[t], y[t]) : ea.odot_set(x[t], y[t]);
        if (!r) {
          throw UndefinedAt(t, std::string(is_plus ? "+" : "(.)") + " is undefined at time index " +
                                   std::to_string(t) + " (" + format_set(ea, x[t]) + ", " + format_set(ea, y[t]) +
                                   ")");
        }
        out[t] = *r;
        break;
      }
    }
  }
  return out;
}

SetProposition lift(const Proposition &p) {
  SetProposition out;
  out.reserve(p.size());
  for (Element e : p) out.push_back(ElementSet::singleton(e));
  return out;
}

Proposition supplement(const EffectAlgebra &ea, const Proposition &p) {
  Proposition out;
  out.reserve(p.size());
  for (Element e : p) out.push_back(ea.supplement(e));
  return out;
}

SetProposition supplement(const EffectAlgebra &ea, const SetProposition &x) {
  SetProposition out;
  out.reserve(x.size());
  for (ElementSet s : x) out.push_back(ea.supplement(s));
  return out;
}

PropositionFamily supplement(const EffectAlgebra &ea, const PropositionFamily &family) {
  PropositionFamily out;
  out.reserve(family.size());
  for (const auto &p : family) out.push_back(supplement(ea, p));
  return out;
}

bool holds_pointwise(const Poset &order, SetRelation rel, const SetProposition &x, const SetProposition &y) {
  if (x.size() != y.size()) return false;
  for (std::size_t t = 0; t < x.size(); ++t) {
    bool ok = false;
    switch (rel) {
      case SetRelation::kLeq1:
        ok = order.leq1(x[t], y[t]);
        break;
      case SetRelation::kLeq2:
        ok = order.leq2(x[t], y[t]);
        break;
      case SetRelation::kSqsub:
        ok = order.sqsub(x[t], y[t]);
        break;
      case SetRelation::kApprox1:
        ok = order.approx1(x[t], y[t]);
        break;
      case SetRelation::kApprox2:
        ok = order.approx2(x[t], y[t]);
        break;
      case SetRelation::kAllLeq:
        ok = order.all_leq(x[t], y[t]);
        break;
      case SetRelation::kEqual:
        ok = x[t] == y[t];
        break;
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<std::uint64_t> proposition_count(const EffectAlgebra &ea, std::size_t times) {
  return domain_size(std::vector<std::uint64_t>(times, ea.size()));
}

Proposition proposition_at(const EffectAlgebra &ea, std::size_t times, std::uint64_t index) {
  Proposition p(times);
  for (auto &v : p) {
    v = static_cast<Element>(index % ea.size());
    index /= ea.size();
  }
  return p;
}

std::uint64_t proposition_index(const EffectAlgebra &ea, const Proposition &p) {
  std::uint64_t idx = 0;
  for (std::size_t t = p.size(); t-- > 0;) idx = idx * ea.size() + p[t];
  return idx;
}

namespace {

using detail::CaseRng;
using detail::PropositionDomain;
using detail::Witness;

std::string show(const EffectAlgebra &ea, const Proposition &p) { return format_tuple(ea, p); }
std::string show(const EffectAlgebra &ea, const SetProposition &x) { return format_tuple(ea, x); }

SetProposition supplement_of(const EffectAlgebra &ea, const SetProposition &x) { return supplement(ea, x); }

}  // namespace

Report check_dynamic_axioms(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts) {
  require_serial(frame);
  const auto &ord = ea.order();
  const std::size_t T = frame.size();
  const PropositionDomain dom(ea, T, opts);
  auto H = [&](const Proposition &p) { return tense_apply(ea, frame, TenseOp::kH, p); };
  auto G = [&](const Proposition &p) { return tense_apply(ea, frame, TenseOp::kG, p); };
  // Existential operators obtained from the universal ones by duality.
  auto P = [&](const Proposition &p) { return supplement_of(ea, H(supplement(ea, p))); };
  auto F = [&](const Proposition &p) { return supplement_of(ea, G(supplement(ea, p))); };

  Report rep;
  {
    const Proposition one(T, ea.one());
    const SetProposition expect = lift(one);
    SweepOutcome o;
    o.cases = 1;
    if (H(one) != expect || G(one) != expect) {
      o.failures = 1;
      o.witness = "H(1) = " + show(ea, H(one)) + ", G(1) = " + show(ea, G(one));
    }
    rep.add(make_check("dynamic.top", "H(1) = G(1) = 1", o));
  }
  rep.add(make_check("dynamic.monotone", "p <= q implies H(p) <=_1 H(q) and G(p) <=_1 G(q)",
                     dom.pairs([&](const Proposition &p, const Proposition &q) -> Witness {
                       for (std::size_t t = 0; t < T; ++t) {
                         if (!ea.leq(p[t], q[t])) return std::nullopt;
                       }
                       if (holds_pointwise(ord, SetRelation::kLeq1, H(p), H(q)) &&
                           holds_pointwise(ord, SetRelation::kLeq1, G(p), G(q))) {
                         return std::nullopt;
                       }
                       return "p=" + show(ea, p) + ", q=" + show(ea, q);
                     })));
  rep.add(make_check("dynamic.additive",
                     "p + q defined implies H(p) + H(q), G(p) + G(q) defined and <=_1 H(p + q), G(p + q)",
                     dom.pairs([&](const Proposition &p, const Proposition &q) -> Witness {
                       Proposition sum(T);
                       for (std::size_t t = 0; t < T; ++t) {
                         const auto s = ea.plus(p[t], q[t]);
                         if (!s) return std::nullopt;
                         sum[t] = *s;
                       }
                       for (auto op : {TenseOp::kH, TenseOp::kG}) {
                         const auto xp = tense_apply(ea, frame, op, p);
                         const auto xq = tense_apply(ea, frame, op, q);
                         SetProposition lhs;
                         try {
                           lhs = pointwise(ea, PointwiseOp::kPlus, xp, xq);
                         } catch (const UndefinedAt &e) {
                           return std::string(1, to_char(op)) + "(p) + " + to_char(op) +
                                  "(q) undefined for p=" + show(ea, p) + ", q=" + show(ea, q);
                         }
                         if (!holds_pointwise(ord, SetRelation::kLeq1, lhs, tense_apply(ea, frame, op, sum))) {
                           return std::string(1, to_char(op)) + " fails for p=" + show(ea, p) + ", q=" + show(ea, q);
                         }
                       }
                       return std::nullopt;
                     })));
  rep.add(make_check("dynamic.round-trip", "p <=_1 (G*P)(p) and p <=_1 (H*F)(p)",
                     dom.each([&](const Proposition &p) -> Witness {
                       const auto gp = apply_phi(ea, frame, TenseOp::kG, P(p));
                       const auto hf = apply_phi(ea, frame, TenseOp::kH, F(p));
                       if (holds_pointwise(ord, SetRelation::kLeq1, lift(p), gp) &&
                           holds_pointwise(ord, SetRelation::kLeq1, lift(p), hf)) {
                         return std::nullopt;
                       }
                       return "p=" + show(ea, p) + ": (G*P)(p)=" + show(ea, gp) + ", (H*F)(p)=" + show(ea, hf);
                     })));
  rep.add(make_check("dynamic.duality", "the frame's own P and F equal H(p')' and G(p')'",
                     dom.each([&](const Proposition &p) -> Witness {
                       if (tense_apply(ea, frame, TenseOp::kP, p) == P(p) &&
                           tense_apply(ea, frame, TenseOp::kF, p) == F(p)) {
                         return std::nullopt;
                       }
                       return "p=" + show(ea, p);
                     })));
  return rep;
}

Report check_tense_laws(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts) {
  require_serial(frame);
  const auto &ord = ea.order();
  const std::size_t T = frame.size();
  const PropositionDomain dom(ea, T, opts);
  // Families and set propositions range over an unbounded space, so these laws are always sampled.
  auto sampled = [&](const std::function<Witness(CaseRng &)> &pred) {
    return sweep(UINT64_MAX, opts, [&](std::uint64_t i) {
      CaseRng rng(opts.seed, i);
      return pred(rng);
    });
  };

  Report rep;
  rep.add(make_check("phi.injective", "x != y implies phi(x) != phi(y)", sampled([&](CaseRng &rng) -> Witness {
                       const auto x = rng.set_proposition(ea, T, 3);
                       auto y = x;
                       // Perturb one time point so the pair is usually distinct but close.
                       y[rng.below(T)] = rng.subset(ea, 3);
                       if ((x == y) == (phi(x) == phi(y))) return std::nullopt;
                       return "x=" + show(ea, x) + ", y=" + show(ea, y);
                     })));
  rep.add(make_check("phi.singleton", "phi of a pointwise singleton is {p}", dom.each([&](const Proposition &p) -> Witness {
                       if (phi(lift(p)) == PropositionFamily{p}) return std::nullopt;
                       return "p=" + show(ea, p);
                     })));
  rep.add(make_check("phi.order", "x <= y iff phi(x) <= phi(y)", sampled([&](CaseRng &rng) -> Witness {
                       const auto x = rng.set_proposition(ea, T, 3);
                       SetProposition y(T);
                       const bool above = rng.next() & 1U;
                       for (std::size_t t = 0; t < T; ++t) {
                         const ElementSet ub = ord.upper_bounds(x[t]);
                         ElementSet pick = rng.subset(ea, 3) & ub;
                         y[t] = (above && !ub.empty()) ? (pick.empty() ? ElementSet::singleton(ub.front()) : pick)
                                                       : rng.subset(ea, 3);
                       }
                       const bool sets = holds_pointwise(ord, SetRelation::kAllLeq, x, y);
                       bool families = true;
                       const auto fx = phi(x), fy = phi(y);
                       for (const auto &r : fx) {
                         for (const auto &s : fy) {
                           for (std::size_t t = 0; t < T && families; ++t) families = ea.leq(r[t], s[t]);
                         }
                       }
                       if (sets == families) return std::nullopt;
                       return "x=" + show(ea, x) + ", y=" + show(ea, y);
                     })));
  rep.add(make_check("tense.union", "X(phi(x))(s) is Min U / Max L of the union of x(t) over the segment",
                     sampled([&](CaseRng &rng) -> Witness {
                       const auto x = rng.set_proposition(ea, T, 3);
                       for (auto op : kTenseOps) {
                         if (apply_phi(ea, frame, op, x) != tense_of_union(ea, frame, op, x)) {
                           return std::string(1, to_char(op)) + " at x=" + show(ea, x);
                         }
                       }
                       return std::nullopt;
                     })));
  rep.add(make_check("tense.duality", "H(A) = P(A')' and G(A) = F(A')'", sampled([&](CaseRng &rng) -> Witness {
                       const auto A = rng.family(ea, T, 3);
                       const auto As = supplement(ea, A);
                       const bool h = tense_apply(ea, frame, TenseOp::kH, A) ==
                                      supplement(ea, tense_apply(ea, frame, TenseOp::kP, As));
                       const bool g = tense_apply(ea, frame, TenseOp::kG, A) ==
                                      supplement(ea, tense_apply(ea, frame, TenseOp::kF, As));
                       if (h && g) return std::nullopt;
                       return "A[0]=" + show(ea, A.front()) + " (" + std::to_string(A.size()) + " members)";
                     })));
  rep.add(make_check("tense.monotone", "A <= B implies P(A) <=_2 P(B), F(A) <=_2 F(B), H(A) <=_1 H(B), G(A) <=_1 G(B)",
                     sampled([&](CaseRng &rng) -> Witness {
                       const auto B = rng.family(ea, T, 3);
                       // Build A below every member of B, time point by time point.
                       PropositionFamily A(1 + rng.below(3), Proposition(T));
                       for (std::size_t t = 0; t < T; ++t) {
                         ElementSet at;
                         for (const auto &b : B) at.insert(b[t]);
                         std::vector<Element> below;
                         for (Element e : ord.lower_bounds(at)) below.push_back(e);
                         for (auto &a : A) a[t] = below[rng.below(below.size())];
                       }
                       auto X = [&](TenseOp op, const PropositionFamily &f) { return tense_apply(ea, frame, op, f); };
                       const bool ok = holds_pointwise(ord, SetRelation::kLeq2, X(TenseOp::kP, A), X(TenseOp::kP, B)) &&
                                       holds_pointwise(ord, SetRelation::kLeq2, X(TenseOp::kF, A), X(TenseOp::kF, B)) &&
                                       holds_pointwise(ord, SetRelation::kLeq1, X(TenseOp::kH, A), X(TenseOp::kH, B)) &&
                                       holds_pointwise(ord, SetRelation::kLeq1, X(TenseOp::kG, A), X(TenseOp::kG, B));
                       if (ok) return std::nullopt;
                       return "A[0]=" + show(ea, A.front()) + ", B[0]=" + show(ea, B.front());
                     })));
  rep.add(make_check("tense.universal-below-existential", "H(A) <= P(A) and G(A) <= F(A)",
                     sampled([&](CaseRng &rng) -> Witness {
                       const auto A = rng.family(ea, T, 3);
                       auto X = [&](TenseOp op) { return tense_apply(ea, frame, op, A); };
                       if (holds_pointwise(ord, SetRelation::kAllLeq, X(TenseOp::kH), X(TenseOp::kP)) &&
                           holds_pointwise(ord, SetRelation::kAllLeq, X(TenseOp::kG), X(TenseOp::kF))) {
                         return std::nullopt;
                       }
                       return "A[0]=" + show(ea, A.front()) + " (" + std::to_string(A.size()) + " members)";
                     })));
  if (frame.reflexive()) {
    rep.add(make_check("tense.reflexive-bounds", "reflexive R: H(p) <= p <= P(p) and G(p) <= p <= F(p)",
                       dom.each([&](const Proposition &p) -> Witness {
                         const auto x = lift(p);
                         auto X = [&](TenseOp op) { return tense_apply(ea, frame, op, p); };
                         if (holds_pointwise(ord, SetRelation::kAllLeq, X(TenseOp::kH), x) &&
                             holds_pointwise(ord, SetRelation::kAllLeq, x, X(TenseOp::kP)) &&
                             holds_pointwise(ord, SetRelation::kAllLeq, X(TenseOp::kG), x) &&
                             holds_pointwise(ord, SetRelation::kAllLeq, x, X(TenseOp::kF))) {
                           return std::nullopt;
                         }
                         return "p=" + show(ea, p);
                       })));
  } else {
    CheckResult skipped;
    skipped.id = "tense.reflexive-bounds";
    skipped.description = "reflexive R: H(p) <= p <= P(p) and G(p) <= p <= F(p)";
    skipped.status = Status::kHypothesisFailed;
    skipped.witness = "relation is not reflexive";
    rep.add(skipped);
  }
  return rep;
}

namespace {

struct Tally {
  std::uint64_t failures = 0;
  std::uint64_t first = UINT64_MAX;
  std::string witness;

  void record(std::uint64_t index, const std::function<std::string()> &witness_of) {
    ++failures;
    if (index < first) {
      first = index;
      witness = witness_of();
    }
  }
};
using Tallies = std::vector<Tally>;

/// Runs body(index, tallies) over [0, count) and merges the per-thread tallies,
/// keeping the witness of the smallest failing index.
Tallies tally_cases(std::uint64_t count, unsigned jobs, std::size_t slots,
                    const std::function<void(std::uint64_t, Tallies &)> &body) {
  std::vector<Tallies> local(std::max(1U, jobs), Tallies(slots));
  parallel_chunks(count, jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) body(i, local[w]);
  });
  Tallies out(slots);
  for (const auto &l : local) {
    for (std::size_t k = 0; k < slots; ++k) {
      out[k].failures += l[k].failures;
      if (l[k].first < out[k].first) {
        out[k].first = l[k].first;
        out[k].witness = l[k].witness;
      }
    }
  }
  return out;
}

struct PropData {
  Proposition p;
  std::array<SetProposition, 4> tense;
};

SetProposition pw_otimes(const ConnectiveTables &tab, const SetProposition &a, const SetProposition &b) {
  SetProposition out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = tab.otimes(a[t], b[t]);
  return out;
}

SetProposition pw_imp(const ConnectiveTables &tab, const SetProposition &a, const SetProposition &b) {
  SetProposition out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = tab.imp(a[t], b[t]);
  return out;
}

std::string triple_name(TenseOp x, TenseOp y, TenseOp z) { return {to_char(x), to_char(y), to_char(z)}; }

}  // namespace

Report check_compatibility(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts,
                           const std::vector<Proposition> *only) {
  require_serial(frame);
  const auto &ord = ea.order();
  const std::size_t T = frame.size();
  const std::size_t n = ea.size();
  const ConnectiveTables tab(ea);
  constexpr std::array<TenseOp, 2> kUniversal{TenseOp::kH, TenseOp::kG};

  auto make_data = [&](Proposition p) {
    PropData d;
    const auto x = lift(p);
    for (std::size_t k = 0; k < 4; ++k) d.tense[k] = tense_of_union(ea, frame, kTenseOps[k], x);
    d.p = std::move(p);
    return d;
  };
  auto idx = [](TenseOp op) { return static_cast<std::size_t>(op); };
  // Slot layout: (i) X*8 + Y*2 + Z-H, (ii) (X-H)*16 + Y*4 + Z.
  auto slot_i = [&](std::size_t x, std::size_t y, std::size_t z) { return x * 8 + y * 2 + (z - idx(TenseOp::kH)); };
  auto slot_ii = [&](std::size_t x, std::size_t y, std::size_t z) { return (x - idx(TenseOp::kH)) * 16 + y * 4 + z; };

  // Hypotheses range over x in (P+E)^T and q in E^T.
  std::vector<std::uint64_t> radix;
  bool hyp_exhaustive = n <= 20;
  if (hyp_exhaustive) {
    radix.assign(T, (std::uint64_t{1} << n) - 1);
    radix.insert(radix.end(), T, n);
    const auto size = domain_size(radix);
    hyp_exhaustive = size && *size <= opts.exhaustive_limit;
  }
  const std::uint64_t hyp_cases = hyp_exhaustive ? *domain_size(radix) : opts.sample_size;
  std::vector<std::uint64_t> hyp_index(hyp_exhaustive ? 0 : hyp_cases);
  {
    std::mt19937_64 gen(opts.seed);
    for (auto &i : hyp_index) i = gen();
  }
  auto hypothesis_case = [&](std::uint64_t k, SetProposition &x, Proposition &q) {
    x.assign(T, ElementSet{});
    q.assign(T, 0);
    if (hyp_exhaustive) {
      const auto d = digits(k, radix);
      for (std::size_t t = 0; t < T; ++t) {
        x[t] = ElementSet::from_bits(d[t] + 1);
        q[t] = d[T + t];
      }
      return k;
    }
    const std::uint64_t index = hyp_index[k];
    CaseRng rng(opts.seed, index);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t t = 0; t < T; ++t) {
      if (rng.next() & 1U) {
        x[t] = rng.subset(ea, 3);
      } else {
        std::uint64_t bits = 0;
        while (bits == 0) bits = rng.next() & full;
        x[t] = ElementSet::from_bits(bits);
      }
    }
    q = rng.proposition(ea, T);
    return index;
  };

  // Slots 0..31 are (i), 32..63 are (ii).
  const Tallies hyp = tally_cases(hyp_cases, opts.jobs, 64, [&](std::uint64_t k, Tallies &tl) {
    SetProposition x;
    Proposition q;
    const std::uint64_t index = hypothesis_case(k, x, q);
    const PropData qd = make_data(q);
    const auto lq = lift(q);
    std::array<SetProposition, 4> tx;
    for (std::size_t a = 0; a < 4; ++a) tx[a] = tense_of_union(ea, frame, kTenseOps[a], x);
    const auto xq = pw_otimes(tab, x, lq);
    const auto qx = pw_imp(tab, lq, x);
    std::array<SetProposition, 4> zxq, xqx;
    for (auto z : kUniversal) zxq[idx(z)] = tense_of_union(ea, frame, z, xq);
    for (auto z : kUniversal) xqx[idx(z)] = tense_of_union(ea, frame, z, qx);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        const auto lhs = pw_otimes(tab, tx[a], qd.tense[b]);
        for (auto z : kUniversal) {
          if (!holds_pointwise(ord, SetRelation::kLeq1, lhs, zxq[idx(z)])) {
            tl[slot_i(a, b, idx(z))].record(index, [&] { return "x=" + show(ea, x) + ", q=" + show(ea, q); });
          }
        }
      }
    }
    for (auto a : kUniversal) {
      for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t c = 0; c < 4; ++c) {
          if (!holds_pointwise(ord, SetRelation::kLeq1, xqx[idx(a)], pw_imp(tab, qd.tense[b], tx[c]))) {
            tl[32 + slot_ii(idx(a), b, c)].record(index,
                                                  [&] { return "p=" + show(ea, q) + ", x=" + show(ea, x); });
          }
        }
      }
    }
  });

  // Conclusion pairs.
  std::vector<PropData> list;
  bool pairs_sampled = false;
  const auto count = proposition_count(ea, T);
  if (only) {
    for (const auto &p : *only) {
      require_length(frame, p.size());
      list.push_back(make_data(p));
    }
  } else if (count && *count <= opts.exhaustive_limit) {
    for (std::uint64_t i = 0; i < *count; ++i) list.push_back(make_data(proposition_at(ea, T, i)));
  } else {
    pairs_sampled = true;
  }
  const std::uint64_t m = list.size();
  const std::uint64_t pair_cases = pairs_sampled ? opts.sample_size : m * m;

  // Slots: conclusion (i) 0..31, conclusion (ii) 32..63, refuted hypothesis (i) 64..95, (ii) 96..127.
  const Tallies concl = tally_cases(pair_cases, opts.jobs, 128, [&](std::uint64_t k, Tallies &tl) {
    PropData pd, qd;
    const PropData *pp = nullptr, *qp = nullptr;
    if (pairs_sampled) {
      CaseRng rng(opts.seed ^ 0xc0ffeeULL, k);
      pd = make_data(rng.proposition(ea, T));
      qd = make_data(rng.proposition(ea, T));
      pp = &pd;
      qp = &qd;
    } else {
      pp = &list[k % m];
      qp = &list[k / m];
    }
    const PropData &p = *pp, &q = *qp;
    const auto lp = lift(p.p), lq = lift(q.p);
    auto pair_text = [&] { return "p=" + show(ea, p.p) + ", q=" + show(ea, q.p); };

    // (i) X(phi(p => q)) below Y(p) => Z(q) in the weak sense.
    const auto pq = pw_imp(tab, lp, lq);
    std::array<SetProposition, 4> lx;
    for (std::size_t a = 0; a < 4; ++a) lx[a] = tense_of_union(ea, frame, kTenseOps[a], pq);
    const auto pq_p = pw_otimes(tab, pq, lp);
    for (std::size_t b = 0; b < 4; ++b) {
      for (auto z : kUniversal) {
        const auto rhs = pw_imp(tab, p.tense[b], q.tense[idx(z)]);
        for (std::size_t a = 0; a < 4; ++a) {
          if (holds_pointwise(ord, SetRelation::kSqsub, lx[a], rhs)) continue;
          const std::size_t s = slot_i(a, b, idx(z));
          tl[s].record(k, [&] {
            return pair_text() + ": " + show(ea, lx[a]) + " vs " + show(ea, rhs);
          });
          // The proof instantiates the hypothesis at x = p => q and q := p.
          const auto h_lhs = pw_otimes(tab, lx[a], p.tense[b]);
          const auto h_rhs = tense_of_union(ea, frame, z, pq_p);
          if (!holds_pointwise(ord, SetRelation::kLeq1, h_lhs, h_rhs)) {
            tl[64 + s].record(k, [&] { return "x=" + show(ea, pq) + ", q=" + show(ea, p.p); });
          }
        }
      }
    }

    // (ii) X(p) (x) Y(q) below Z(phi(p (x) q)) in the weak sense.
    const auto pxq = pw_otimes(tab, lp, lq);
    std::array<SetProposition, 4> zr;
    for (std::size_t c = 0; c < 4; ++c) zr[c] = tense_of_union(ea, frame, kTenseOps[c], pxq);
    const auto q_pxq = pw_imp(tab, lq, pxq);
    for (auto a : kUniversal) {
      for (std::size_t b = 0; b < 4; ++b) {
        const auto lhs = pw_otimes(tab, p.tense[idx(a)], q.tense[b]);
        for (std::size_t c = 0; c < 4; ++c) {
          if (holds_pointwise(ord, SetRelation::kSqsub, lhs, zr[c])) continue;
          const std::size_t s = 32 + slot_ii(idx(a), b, c);
          tl[s].record(k, [&] { return pair_text() + ": " + show(ea, lhs) + " vs " + show(ea, zr[c]); });
          // The proof instantiates the hypothesis at p := q and x = p (x) q.
          const auto h_lhs = tense_of_union(ea, frame, a, q_pxq);
          const auto h_rhs = pw_imp(tab, q.tense[b], zr[c]);
          if (!holds_pointwise(ord, SetRelation::kLeq1, h_lhs, h_rhs)) {
            tl[64 + s].record(k, [&] { return "p=" + show(ea, q.p) + ", x=" + show(ea, pxq); });
          }
        }
      }
    }
  });

  Report rep;
  auto emit = [&](std::size_t s, const std::string &id, const std::string &desc) {
    CheckResult r;
    r.id = id;
    r.description = desc;
    r.cases = pair_cases;
    r.failures = concl[s].failures;
    r.sampled = pairs_sampled || !hyp_exhaustive;
    if (hyp[s].failures > 0 || concl[64 + s].failures > 0) {
      r.status = Status::kHypothesisFailed;
      r.witness = hyp[s].failures > 0 ? hyp[s].witness : concl[64 + s].witness;
    } else {
      r.status = concl[s].failures == 0 ? Status::kPass : Status::kFail;
      r.witness = concl[s].witness;
    }
    rep.add(std::move(r));
  };
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (auto z : kUniversal) {
        const std::string name = triple_name(kTenseOps[a], kTenseOps[b], z);
        emit(slot_i(a, b, idx(z)), "compat.imp." + name,
             "X(phi(x)) (x) Y(q) <=_1 Z(phi(x (x) q)) implies X(phi(p => q)) [= Y(p) => Z(q)");
      }
    }
  }
  for (auto a : kUniversal) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 4; ++c) {
        const std::string name = triple_name(a, kTenseOps[b], kTenseOps[c]);
        emit(32 + slot_ii(idx(a), b, c), "compat.otimes." + name,
             "X(phi(p => x)) <=_1 Y(p) => Z(phi(x)) implies X(p) (x) Y(q) [= Z(phi(p (x) q))");
      }
    }
  }
  return rep;
}

}  // namespace unsharp
