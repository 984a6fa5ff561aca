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

#include "unsharp/frame_induction.hpp"

#include <algorithm>
#include <random>

#include "detail.hpp"
#include "unsharp/format.hpp"

namespace unsharp {

using detail::CaseRng;
using detail::PropositionDomain;
using detail::Witness;

OperatorTable::OperatorTable(std::vector<std::string> times) : times_(std::move(times)) {
  if (times_.empty()) throw FrameError("time set is empty");
  for (auto &d : defaults_) d.assign(times_.size(), std::nullopt);
}

OperatorTable OperatorTable::induced(const EffectAlgebra &, const TimeFrame &frame) {
  if (!frame.serial()) throw FrameError("tense operators need a serial frame");
  OperatorTable t(frame.names());
  t.source_ = frame;
  return t;
}

void OperatorTable::set(TenseOp op, const Proposition &p, TimePoint t, ElementSet value) {
  if (p.size() != size()) throw Error("proposition has the wrong number of time points");
  if (t >= size()) throw FrameError("unknown time point");
  if (value.empty()) throw Error("operator values must be nonempty");
  auto &row = explicit_[{op, p}];
  if (row.empty()) row.assign(size(), std::nullopt);
  row[t] = value;
}

void OperatorTable::set_default(TenseOp op, TimePoint t, ElementSet value) {
  if (t >= size()) throw FrameError("unknown time point");
  if (value.empty()) throw Error("operator values must be nonempty");
  defaults_[static_cast<std::size_t>(op)][t] = value;
}

SetProposition OperatorTable::apply(const EffectAlgebra &ea, TenseOp op, const Proposition &p) const {
  if (p.size() != size()) throw Error("proposition has the wrong number of time points");
  if (source_) return tense_of_union(ea, *source_, op, lift(p));
  const auto it = explicit_.find({op, p});
  const auto &fallback = defaults_[static_cast<std::size_t>(op)];
  SetProposition out(size());
  for (TimePoint t = 0; t < size(); ++t) {
    std::optional<ElementSet> v;
    if (it != explicit_.end()) v = it->second[t];
    if (!v) v = fallback[t];
    if (!v) {
      throw FrameError(std::string("no value for ") + to_char(op) + "(" + format_tuple(ea, p) + ") at time " +
                       times_[t]);
    }
    for (Element e : *v) {
      if (e >= ea.size()) throw UnknownElement("operator value outside the carrier");
    }
    out[t] = *v;
  }
  return out;
}

std::array<SetProposition, 4> OperatorTable::apply_all(const EffectAlgebra &ea, const Proposition &p) const {
  return {apply(ea, TenseOp::kP, p), apply(ea, TenseOp::kF, p), apply(ea, TenseOp::kH, p), apply(ea, TenseOp::kG, p)};
}

void OperatorTable::check_total(const EffectAlgebra &ea) const {
  if (source_) return;
  for (const auto &[key, row] : explicit_) {
    for (Element e : key.second) {
      if (e >= ea.size()) throw UnknownElement("operator table refers to an element outside the carrier");
    }
    for (const auto &v : row) {
      if (v && !v->subset_of(ElementSet::first_n(ea.size()))) {
        throw UnknownElement("operator value outside the carrier");
      }
    }
  }
  for (auto op : kTenseOps) {
    const auto &fallback = defaults_[static_cast<std::size_t>(op)];
    if (std::all_of(fallback.begin(), fallback.end(), [](const auto &v) { return v.has_value(); })) continue;
    const auto count = proposition_count(ea, size());
    if (!count) throw FrameError("operator table cannot be total over this many propositions");
    for (std::uint64_t i = 0; i < *count; ++i) apply(ea, op, proposition_at(ea, size(), i));
  }
}

InducedRelation induce_relation(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts) {
  ops.check_total(ea);
  const std::size_t T = ops.size();
  const auto &ord = ea.order();
  const PropositionDomain dom(ea, T, opts);
  const bool exhaustive = dom.exhaustive();
  const std::uint64_t cases = exhaustive ? dom.count() : opts.sample_size;
  std::vector<std::uint64_t> sample(exhaustive ? 0 : cases);
  {
    std::mt19937_64 gen(opts.seed);
    for (auto &s : sample) s = gen();
  }
  auto below_all = [&](ElementSet a, Element e) { return ord.all_leq(a, ElementSet::singleton(e)); };
  auto above_all = [&](Element e, ElementSet a) { return ord.all_leq(ElementSet::singleton(e), a); };

  // alive[s * T + t] is cleared once some p refutes (s, t).
  std::vector<std::vector<char>> alive(std::max(1U, opts.jobs), std::vector<char>(T * T, 1));
  parallel_chunks(cases, opts.jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto &mine = alive[w];
    for (std::uint64_t k = begin; k < end; ++k) {
      Proposition p;
      if (exhaustive) {
        p = dom.at(k);
      } else {
        CaseRng rng(opts.seed, sample[k]);
        p = rng.proposition(ea, T);
      }
      const auto v = ops.apply_all(ea, p);
      const auto &P = v[0], &F = v[1], &H = v[2], &G = v[3];
      for (TimePoint s = 0; s < T; ++s) {
        for (TimePoint t = 0; t < T; ++t) {
          char &cell = mine[s * T + t];
          if (!cell) continue;
          cell = below_all(H[t], p[s]) && above_all(p[s], P[t]) && below_all(G[s], p[t]) && above_all(p[t], F[s]);
        }
      }
    }
  });
  InducedRelation out;
  out.propositions = cases;
  out.sampled = !exhaustive;
  for (TimePoint s = 0; s < T; ++s) {
    for (TimePoint t = 0; t < T; ++t) {
      const bool keep = std::all_of(alive.begin(), alive.end(), [&](const auto &a) { return a[s * T + t] != 0; });
      if (keep) out.pairs.emplace_back(s, t);
    }
  }
  return out;
}

TimeFrame induced_frame(const OperatorTable &ops, const InducedRelation &rel) {
  return TimeFrame(ops.times(), rel.pairs);
}

namespace {

CheckResult unmet(std::string id, std::string description, std::string why) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = Status::kHypothesisFailed;
  r.witness = std::move(why);
  return r;
}

struct Comparison {
  const char *id;
  const char *description;
  TenseOp op;
  SetRelation rel;
  bool star_on_left;
};

}  // namespace

Report check_induced_bounds(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts) {
  static constexpr std::array<Comparison, 4> kBounds = {{
      {"induced.past-existential", "P* <=_2 P", TenseOp::kP, SetRelation::kLeq2, true},
      {"induced.future-existential", "F* <=_2 F", TenseOp::kF, SetRelation::kLeq2, true},
      {"induced.past-universal", "H <=_1 H*", TenseOp::kH, SetRelation::kLeq1, false},
      {"induced.future-universal", "G <=_1 G*", TenseOp::kG, SetRelation::kLeq1, false},
  }};
  const auto rel = induce_relation(ea, ops, opts);
  const TimeFrame star = induced_frame(ops, rel);
  Report rep;
  if (!star.serial()) {
    for (const auto &c : kBounds) rep.add(unmet(c.id, c.description, "induced relation is not serial"));
    return rep;
  }
  const auto &ord = ea.order();
  const PropositionDomain dom(ea, ops.size(), opts);
  for (const auto &c : kBounds) {
    auto o = dom.each([&](const Proposition &p) -> Witness {
      const auto given = ops.apply(ea, c.op, p);
      const auto induced = tense_of_union(ea, star, c.op, lift(p));
      const bool ok = c.star_on_left ? holds_pointwise(ord, c.rel, induced, given)
                                     : holds_pointwise(ord, c.rel, given, induced);
      if (ok) return std::nullopt;
      return "p=" + format_tuple(ea, p) + ": given " + format_tuple(ea, given) + ", induced " +
             format_tuple(ea, induced);
    });
    o.sampled = o.sampled || rel.sampled;
    rep.add(make_check(c.id, c.description, o));
  }
  return rep;
}

Report check_induced_equivalence(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts) {
  const auto ops = OperatorTable::induced(ea, frame);
  const auto rel = induce_relation(ea, ops, opts);
  const TimeFrame star = induced_frame(ops, rel);
  Report rep;
  {
    SweepOutcome o;
    o.cases = frame.pairs().size();
    o.sampled = rel.sampled;
    for (auto [s, t] : frame.pairs()) {
      if (!std::binary_search(rel.pairs.begin(), rel.pairs.end(), std::make_pair(s, t))) {
        if (o.failures++ == 0) o.witness = "(" + frame.name(s) + ", " + frame.name(t) + ") missing from R*";
      }
    }
    rep.add(make_check("induced.contains-frame", "R is contained in R*", o));
  }
  static constexpr std::array<Comparison, 5> kEquiv = {{
      {"induced.equiv-past-existential", "P* ~_2 P", TenseOp::kP, SetRelation::kApprox2, true},
      {"induced.equiv-future-existential", "F* ~_2 F", TenseOp::kF, SetRelation::kApprox2, true},
      {"induced.equiv-past-universal", "H* ~_1 H", TenseOp::kH, SetRelation::kApprox1, true},
      {"induced.equiv-future-universal", "G* ~_1 G", TenseOp::kG, SetRelation::kApprox1, true},
      {"induced.equiv-future-universal-2", "G* ~_2 G", TenseOp::kG, SetRelation::kApprox2, true},
  }};
  const auto &ord = ea.order();
  const PropositionDomain dom(ea, frame.size(), opts);
  for (const auto &c : kEquiv) {
    auto o = dom.each([&](const Proposition &p) -> Witness {
      const auto given = tense_of_union(ea, frame, c.op, lift(p));
      const auto induced = tense_of_union(ea, star, c.op, lift(p));
      if (holds_pointwise(ord, c.rel, induced, given)) return std::nullopt;
      return "p=" + format_tuple(ea, p) + ": given " + format_tuple(ea, given) + ", induced " +
             format_tuple(ea, induced);
    });
    o.sampled = o.sampled || rel.sampled;
    rep.add(make_check(c.id, c.description, o));
  }
  auto o = dom.each([&](const Proposition &p) -> Witness {
    for (auto op : kTenseOps) {
      if (tense_of_union(ea, frame, op, lift(p)) != tense_of_union(ea, star, op, lift(p))) {
        return std::string(1, to_char(op)) + " differs at p=" + format_tuple(ea, p);
      }
    }
    return std::nullopt;
  });
  o.sampled = o.sampled || rel.sampled;
  rep.add(make_check("induced.exact", "P* = P, F* = F, H* = H and G* = G", o));
  return rep;
}

namespace {

std::vector<std::string> extended_names(const std::vector<std::string> &times) {
  std::vector<std::string> names;
  for (const auto &t : times) names.push_back("(" + t + ",1)");
  for (const auto &t : times) names.push_back(t);
  for (const auto &t : times) names.push_back("(" + t + ",2)");
  return names;
}

std::vector<std::pair<TimePoint, TimePoint>> extended_pairs(std::size_t n, const InducedRelation &rel) {
  std::vector<std::pair<TimePoint, TimePoint>> pairs;
  for (TimePoint t = 0; t < n; ++t) pairs.emplace_back(t, n + t);
  for (auto [s, t] : rel.pairs) pairs.emplace_back(n + s, n + t);
  for (TimePoint t = 0; t < n; ++t) pairs.emplace_back(n + t, 2 * n + t);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

ExtendedFrame::ExtendedFrame(const OperatorTable &ops, const InducedRelation &rel) : base_(ops.size()) {
  if (3 * base_ > kMaxElements) {
    throw FrameError("the extended frame supports at most " + std::to_string(kMaxElements / 3) + " time points");
  }
  // TimeFrame rejects duplicate ids, which catches a base id spelled like "(t,1)".
  frame_ = TimeFrame(extended_names(ops.times()), extended_pairs(base_, rel));
}

PropositionFamily ExtendedFrame::selections(const Proposition &p, const SetProposition &past_values,
                                            const SetProposition &future_values, std::uint64_t cap) const {
  SetProposition x(3 * base_);
  for (TimePoint t = 0; t < base_; ++t) {
    x[past(t)] = past_values.at(t);
    x[present(t)] = ElementSet::singleton(p.at(t));
    x[future(t)] = future_values.at(t);
  }
  return phi(x, cap);
}

ExtendedFrame extend_frame(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts) {
  return ExtendedFrame(ops, induce_relation(ea, ops, opts));
}

Report check_extension(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts) {
  const auto rel = induce_relation(ea, ops, opts);
  const ExtendedFrame ext(ops, rel);
  const TimeFrame &bar = ext.frame();
  const std::size_t T = ops.size();
  const PropositionDomain dom(ea, T, opts);

  struct Part {
    const char *id;
    const char *description;
    TenseOp op;
    bool existential;
  };
  static constexpr std::array<Part, 4> kParts = {{
      {"extension.past-existential", "P-bar(p-bar)|T within P(p)", TenseOp::kP, true},
      {"extension.future-existential", "F-bar(p-bar)|T within F(p)", TenseOp::kF, true},
      {"extension.past-universal", "H-bar(p-hat)|T within H(p)", TenseOp::kH, false},
      {"extension.future-universal", "G-bar(p-hat)|T within G(p)", TenseOp::kG, false},
  }};

  // Selections of one kind for p, sampled when there are too many.
  auto choose = [&](const Proposition &p, const SetProposition &past, const SetProposition &future, bool &sampled) {
    std::uint64_t total = 1;
    for (TimePoint t = 0; t < T && total <= kSelectionCap; ++t) {
      total *= past[t].size();
      total *= future[t].size();
    }
    if (total <= kSelectionCap) return ext.selections(p, past, future, kSelectionCap);
    sampled = true;
    PropositionFamily out;
    CaseRng rng(opts.seed, proposition_index(ea, p));
    auto pick = [&](ElementSet s) {
      std::vector<Element> v(s.begin(), s.end());
      return v[rng.below(v.size())];
    };
    for (std::uint64_t k = 0; k < 64; ++k) {
      Proposition q(3 * T);
      for (TimePoint t = 0; t < T; ++t) {
        q[ext.past(t)] = pick(past[t]);
        q[ext.present(t)] = p[t];
        q[ext.future(t)] = pick(future[t]);
      }
      out.push_back(std::move(q));
    }
    return out;
  };

  Report rep;
  bool any_sampled = rel.sampled;
  std::array<SweepOutcome, 4> parts;
  SweepOutcome exact, singleton;
  // Evaluated serially per proposition: the selection counts vary too much to split evenly.
  auto each_prop = [&](const Proposition &p) {
    const auto v = ops.apply_all(ea, p);
    bool sampled = false;
    const auto bars = choose(p, v[0], v[1], sampled);
    const auto hats = choose(p, v[2], v[3], sampled);
    any_sampled = any_sampled || sampled;
    bool all_single = true;
    for (const auto &x : v) {
      for (ElementSet s : x) all_single = all_single && s.size() == 1;
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const auto &part = kParts[k];
      const auto &family = part.existential ? bars : hats;
      const auto &given = v[static_cast<std::size_t>(part.op)];
      for (const auto &sel : family) {
        bool within = true, is_exact = true, equal = true;
        for (TimePoint s = 0; s < T; ++s) {
          const ElementSet got = tense_at(ea, bar, part.op, PropositionFamily{sel}, ext.present(s));
          const TimePoint side = (part.op == TenseOp::kP || part.op == TenseOp::kH) ? ext.past(s) : ext.future(s);
          within = within && got.subset_of(given[s]);
          is_exact = is_exact && got == ElementSet::singleton(sel[side]);
          equal = equal && got == given[s];
        }
        auto note = [&](SweepOutcome &o, bool ok, const char *what) {
          ++o.cases;
          if (!ok && o.failures++ == 0) {
            o.witness = std::string(what) + " for p=" + format_tuple(ea, p) + ", selection " + format_tuple(ea, sel);
          }
        };
        note(parts[k], within, part.id);
        note(exact, is_exact, part.id);
        if (all_single) note(singleton, equal, part.id);
      }
    }
  };
  if (dom.exhaustive()) {
    for (std::uint64_t i = 0; i < dom.count(); ++i) each_prop(dom.at(i));
  } else {
    std::mt19937_64 gen(opts.seed);
    for (std::uint64_t i = 0; i < opts.sample_size; ++i) {
      CaseRng rng(opts.seed, gen());
      each_prop(rng.proposition(ea, T));
    }
    any_sampled = true;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    parts[k].sampled = any_sampled;
    rep.add(make_check(kParts[k].id, kParts[k].description, parts[k]));
  }
  exact.sampled = singleton.sampled = any_sampled;
  rep.add(make_check("extension.value", "each restricted value is the singleton of the chosen (s,1) or (s,2) value",
                     exact));
  rep.add(make_check("extension.singleton-equality",
                     "singleton operator values: the restrictions equal P(p), F(p), H(p), G(p)", singleton));
  return rep;
}

}  // namespace unsharp
