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

#include "unsharp/connectives.hpp"

#include <array>
#include <string>

#include "unsharp/format.hpp"

namespace unsharp {

namespace {

ElementSet pair_set(Element a, Element b) { return ElementSet::singleton(a) | ElementSet::singleton(b); }

}  // namespace

ElementSet imp_arrow(const EffectAlgebra &ea, Element b, Element c) {
  ElementSet candidates;
  for (Element x = 0; x < ea.size(); ++x) {
    const auto xb = ea.odot(x, b);
    if (xb && ea.leq(*xb, c)) candidates.insert(x);
  }
  // b' is always a candidate since b' (.) b = 0.
  if (candidates.empty()) throw InvariantError("b -> c has no candidates");
  return ea.order().max_of(candidates);
}

std::optional<Element> imp_squig(const EffectAlgebra &ea, Element b, Element c) {
  if (!ea.leq(c, b)) return std::nullopt;
  const auto s = ea.plus(ea.supplement(b), c);
  if (!s) throw InvariantError("b' + c undefined although c <= b");
  return s;
}

ElementSet max_lower(const EffectAlgebra &ea, Element a, Element b) {
  return ea.order().max_of(ea.order().lower_bounds(pair_set(a, b)));
}

ElementSet imp_double(const EffectAlgebra &ea, Element b, Element c) {
  ElementSet out;
  const Element bs = ea.supplement(b);
  for (Element m : max_lower(ea, b, c)) {
    const auto s = ea.plus(bs, m);
    if (!s) throw InvariantError("b' + m undefined for m in Max L(b, c)");
    out.insert(*s);
  }
  return out;
}

ElementSet otimes(const EffectAlgebra &ea, Element a, Element b) {
  ElementSet out;
  const auto &ord = ea.order();
  for (Element u : ord.min_of(ord.upper_bounds(pair_set(a, ea.supplement(b))))) {
    const auto p = ea.odot(u, b);
    if (!p) throw InvariantError("u (.) b undefined for u in Min U(a, b')");
    out.insert(*p);
  }
  return out;
}

ElementSet otimes_set(const EffectAlgebra &ea, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) out |= otimes(ea, x, y);
  }
  return out;
}

ElementSet imp_double_set(const EffectAlgebra &ea, ElementSet a, ElementSet b) {
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) out |= imp_double(ea, x, y);
  }
  return out;
}

DualityResult duality_check(const EffectAlgebra &ea) {
  for (Element a = 0; a < ea.size(); ++a) {
    for (Element b = 0; b < ea.size(); ++b) {
      const bool first = otimes(ea, a, b) == ea.supplement(imp_double(ea, b, ea.supplement(a)));
      const bool second = imp_double(ea, a, b) == ea.supplement(otimes(ea, ea.supplement(b), a));
      if (!first || !second) return {false, std::pair{a, b}};
    }
  }
  return {};
}

ConnectiveTables::ConnectiveTables(const EffectAlgebra &ea) : ea_(&ea), n_(ea.size()) {
  arrow_.resize(n_ * n_);
  imp_.resize(n_ * n_);
  otimes_.resize(n_ * n_);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      arrow_[a * n_ + b] = imp_arrow(ea, a, b);
      imp_[a * n_ + b] = imp_double(ea, a, b);
      otimes_[a * n_ + b] = unsharp::otimes(ea, a, b);
    }
  }
}

ElementSet ConnectiveTables::imp(ElementSet a, ElementSet b) const {
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) out |= imp(x, y);
  }
  return out;
}

ElementSet ConnectiveTables::otimes(ElementSet a, ElementSet b) const {
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) out |= otimes(x, y);
  }
  return out;
}

Report check_connective_laws(const EffectAlgebra &ea, const SweepOptions &opts) {
  const ConnectiveTables tab(ea);
  const auto &ord = ea.order();
  const std::uint64_t n = ea.size();
  const Element zero = ea.zero(), one = ea.one();
  const ElementSet ONE = ElementSet::singleton(one);
  auto sup = [&](Element a) { return ea.supplement(a); };
  auto single = [](Element e) { return ElementSet::singleton(e); };
  auto nm = [&](Element e) -> const std::string & { return ea.name(e); };
  using Witness = std::optional<std::string>;

  Report rep;
  auto pair_law = [&](std::string id, std::string text, auto law) {
    rep.add(make_check(std::move(id), std::move(text), sweep_all(n * n, opts.jobs, [&](std::uint64_t i) -> Witness {
                         const Element a = i % n, b = i / n;
                         if (law(a, b)) return std::nullopt;
                         return "a=" + nm(a) + ", b=" + nm(b);
                       })));
  };
  auto triple_law = [&](std::string id, std::string text, auto law) {
    rep.add(make_check(std::move(id), std::move(text),
                       sweep_all(n * n * n, opts.jobs, [&](std::uint64_t i) -> Witness {
                         const Element a = i % n, b = (i / n) % n, c = i / (n * n);
                         if (law(a, b, c)) return std::nullopt;
                         return "a=" + nm(a) + ", b=" + nm(b) + ", c=" + nm(c);
                       })));
  };

  pair_law("connectives.antichains", "a -> b, a => b and a (x) b are nonempty antichains", [&](Element a, Element b) {
    for (ElementSet s : {tab.arrow(a, b), tab.imp(a, b), tab.otimes(a, b)}) {
      if (s.empty() || !ord.is_antichain(s)) return false;
    }
    return true;
  });

  // -> and (.)
  pair_law("arrow.supplement-below", "a' <=_1 a -> b and a -> b is nonempty", [&](Element a, Element b) {
    return !tab.arrow(a, b).empty() && ord.leq1(single(sup(a)), tab.arrow(a, b));
  });
  pair_law("arrow.units", "a -> 0 = a' and 1 -> a = a", [&](Element a, Element) {
    return tab.arrow(a, zero) == single(sup(a)) && tab.arrow(one, a) == single(a);
  });
  pair_law("arrow.top-iff-leq", "a -> b = 1 iff a <= b",
           [&](Element a, Element b) { return (tab.arrow(a, b) == ONE) == ea.leq(a, b); });
  triple_law("arrow.monotone", "a <= b implies c -> a <=_1 c -> b", [&](Element a, Element b, Element c) {
    return !ea.leq(a, b) || ord.leq1(tab.arrow(c, a), tab.arrow(c, b));
  });
  triple_law("arrow.adjointness", "a (.) b defined: a (.) b <= c iff a <=_1 b -> c", [&](Element a, Element b, Element c) {
    const auto ab = ea.odot(a, b);
    return !ab || ea.leq(*ab, c) == ord.leq1(single(a), tab.arrow(b, c));
  });
  pair_law("arrow.modus-ponens", "(a -> b) (.) a is defined and (a -> b) (.) a <= b", [&](Element a, Element b) {
    const auto prod = ea.odot_set(tab.arrow(a, b), single(a));
    return prod && ord.all_leq(*prod, single(b));
  });
  pair_law("arrow.unit", "a (.) b defined implies a <=_1 b -> (a (.) b)", [&](Element a, Element b) {
    const auto ab = ea.odot(a, b);
    return !ab || ord.leq1(single(a), tab.arrow(b, *ab));
  });
  pair_law("arrow.divisibility", "(a -> b) (.) a <=_1 Max L(a, b)", [&](Element a, Element b) {
    const auto prod = ea.odot_set(tab.arrow(a, b), single(a));
    return prod && ord.leq1(*prod, max_lower(ea, a, b));
  });

  // ~>
  pair_law("squig.supplement-below", "a ~> b defined implies a' <= a ~> b", [&](Element a, Element b) {
    const auto s = imp_squig(ea, a, b);
    return !s || ea.leq(sup(a), *s);
  });
  // 1 ~> a = 1' + a = 0 + a = a, not a'.
  pair_law("squig.units", "a ~> 0 = a' and 1 ~> a = a", [&](Element a, Element) {
    return imp_squig(ea, a, zero) == sup(a) && imp_squig(ea, one, a) == a;
  });
  pair_law("squig.top-iff-equal", "a ~> b = 1 iff a = b",
           [&](Element a, Element b) { return (imp_squig(ea, a, b) == one) == (a == b); });
  triple_law("squig.monotone", "a <= b and c ~> b defined imply c ~> a defined and c ~> a <= c ~> b",
             [&](Element a, Element b, Element c) {
               const auto cb = imp_squig(ea, c, b);
               if (!ea.leq(a, b) || !cb) return true;
               const auto ca = imp_squig(ea, c, a);
               return ca && ea.leq(*ca, *cb);
             });
  pair_law("squig.agrees-with-arrow", "a ~> b defined implies a -> b = a ~> b", [&](Element a, Element b) {
    const auto s = imp_squig(ea, a, b);
    return !s || tab.arrow(a, b) == single(*s);
  });
  triple_law("squig.adjointness", "a (.) b and b ~> c defined: a (.) b <= c iff a <= b ~> c",
             [&](Element a, Element b, Element c) {
               const auto ab = ea.odot(a, b);
               const auto bc = imp_squig(ea, b, c);
               return !ab || !bc || ea.leq(*ab, c) == ea.leq(a, *bc);
             });

  // =>
  pair_law("imp.supplement-below", "a' <= a => b and a => b is nonempty", [&](Element a, Element b) {
    return !tab.imp(a, b).empty() && ord.all_leq(single(sup(a)), tab.imp(a, b));
  });
  pair_law("imp.units", "a => 0 = a' and 1 => a = a", [&](Element a, Element) {
    return tab.imp(a, zero) == single(sup(a)) && tab.imp(one, a) == single(a);
  });
  pair_law("imp.top-iff-leq", "a => b = 1 iff a <= b",
           [&](Element a, Element b) { return (tab.imp(a, b) == ONE) == ea.leq(a, b); });
  triple_law("imp.monotone", "a <= b implies c => a <=_1 c => b", [&](Element a, Element b, Element c) {
    return !ea.leq(a, b) || ord.leq1(tab.imp(c, a), tab.imp(c, b));
  });
  pair_law("imp.below-arrow", "a => b <=_1 a -> b",
           [&](Element a, Element b) { return ord.leq1(tab.imp(a, b), tab.arrow(a, b)); });
  pair_law("imp.three-agree", "a ~> b defined implies a -> b = a => b = a ~> b", [&](Element a, Element b) {
    const auto s = imp_squig(ea, a, b);
    return !s || (tab.arrow(a, b) == single(*s) && tab.imp(a, b) == single(*s));
  });

  // (x)
  pair_law("otimes.below-right", "a (x) b is nonempty and a (x) b <= b", [&](Element a, Element b) {
    return !tab.otimes(a, b).empty() && ord.all_leq(tab.otimes(a, b), single(b));
  });
  pair_law("otimes.units", "a (x) 1 = 1 (x) a = a", [&](Element a, Element) {
    return tab.otimes(a, one) == single(a) && tab.otimes(one, a) == single(a);
  });
  pair_law("otimes.zero-iff-orthogonal", "a (x) b = 0 iff a is orthogonal to b",
           [&](Element a, Element b) { return (tab.otimes(a, b) == single(zero)) == ea.orthogonal(a, b); });
  triple_law("otimes.monotone", "a <= b implies a (x) c <=_2 b (x) c", [&](Element a, Element b, Element c) {
    return !ea.leq(a, b) || ord.leq2(tab.otimes(a, c), tab.otimes(b, c));
  });
  triple_law("otimes.adjointness", "a (x) b [= c iff a [= b => c", [&](Element a, Element b, Element c) {
    return ord.sqsub(tab.otimes(a, b), single(c)) == ord.sqsub(single(a), tab.imp(b, c));
  });
  pair_law("otimes.divisibility", "(a => b) (x) a = Max L(a, b)",
           [&](Element a, Element b) { return tab.otimes(tab.imp(a, b), single(a)) == max_lower(ea, a, b); });
  pair_law("otimes.duality", "a (x) b = (b => a')' and a => b = (b' (x) a)'", [&](Element a, Element b) {
    return tab.otimes(a, b) == ea.supplement(tab.imp(b, sup(a))) &&
           tab.imp(a, b) == ea.supplement(tab.otimes(sup(b), a));
  });
  pair_law("otimes.unit", "a <= b => (a (x) b), which equals Min U(a, b')", [&](Element a, Element b) {
    const ElementSet rhs = tab.imp(single(b), tab.otimes(a, b));
    return ord.all_leq(single(a), rhs) && rhs == ord.min_of(ord.upper_bounds(single(a) | single(sup(b))));
  });
  pair_law("otimes.counit", "(a => b) (x) a <= b",
           [&](Element a, Element b) { return ord.all_leq(tab.otimes(tab.imp(a, b), single(a)), single(b)); });

  // Set-level adjointness over triples of nonempty subsets. Small carriers index
  // the triples directly; larger ones hash the sampled index into three masks.
  const bool direct = n <= 21;
  const std::uint64_t subsets = direct ? (std::uint64_t{1} << n) - 1 : 0;
  const std::uint64_t domain = direct ? domain_size({subsets, subsets, subsets}).value_or(UINT64_MAX) : UINT64_MAX;
  auto subsets_of = [&](std::uint64_t i) -> std::array<ElementSet, 3> {
    if (direct) {
      const auto d = digits(i, {subsets, subsets, subsets});
      return {ElementSet::from_bits(d[0] + 1), ElementSet::from_bits(d[1] + 1), ElementSet::from_bits(d[2] + 1)};
    }
    std::array<ElementSet, 3> out;
    std::uint64_t state = i;
    for (auto &s : out) {
      do {
        s = ElementSet::from_bits(splitmix64(state)) & ea.carrier();
      } while (s.empty());
    }
    return out;
  };
  SweepOptions set_opts = opts;
  set_opts.sample_size = std::max<std::uint64_t>(opts.sample_size, 1000);
  rep.add(make_check("otimes.set-adjointness", "A (x) B [= C iff A [= B => C on nonempty subsets",
                     sweep(domain, set_opts, [&](std::uint64_t i) -> Witness {
                       const auto [A, B, C] = subsets_of(i);
                       if (ord.sqsub(tab.otimes(A, B), C) == ord.sqsub(A, tab.imp(B, C))) return std::nullopt;
                       return "A=" + format_set(ea, A) + ", B=" + format_set(ea, B) + ", C=" + format_set(ea, C);
                     })));
  return rep;
}

}  // namespace unsharp
