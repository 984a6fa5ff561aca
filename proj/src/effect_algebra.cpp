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

#include "unsharp/effect_algebra.hpp"

#include <set>
#include <utility>

namespace unsharp {

const char *to_string(Axiom a) {
  switch (a) {
    case Axiom::kE1:
      return "E1";
    case Axiom::kE2:
      return "E2";
    case Axiom::kE3:
      return "E3";
    case Axiom::kE4:
      return "E4";
    case Axiom::kSupplement:
      return "supplement";
    case Axiom::kOrder:
      return "order";
  }
  return "?";
}

namespace {

void check_structure(const RawAlgebra &raw) {
  const std::size_t n = raw.names.size();
  if (n == 0) throw Error("algebra has no elements");
  if (n > kMaxElements) throw Error("algebra has " + std::to_string(n) + " elements; at most 64 are supported");
  std::set<std::string> seen;
  for (const auto &name : raw.names) {
    if (!seen.insert(name).second) throw Error("duplicate element '" + name + "'");
  }
  if (raw.zero >= n || raw.one >= n) throw Error("zero or one is not an element");
  if (raw.plus.size() != n) throw Error("plus table must have one row per element");
  for (const auto &row : raw.plus) {
    if (row.size() != n) throw Error("plus table is not square");
    for (const auto &cell : row) {
      if (cell && *cell >= n) throw Error("plus table refers to an element outside the carrier");
    }
  }
  if (raw.supplement) {
    if (raw.supplement->size() != n) throw Error("supplement map must cover every element");
    for (Element e : *raw.supplement) {
      if (e >= n) throw Error("supplement map refers to an element outside the carrier");
    }
  }
}

}  // namespace

std::variant<EffectAlgebra, AxiomViolation> verify_axioms(RawAlgebra raw) {
  check_structure(raw);
  const std::size_t n = raw.names.size();
  const auto &names = raw.names;
  const auto &plus = raw.plus;
  auto violation = [&](Axiom ax, std::vector<Element> w, const std::string &msg) {
    std::string text = std::string("(") + to_string(ax) + ") " + msg;
    return AxiomViolation{ax, std::move(w), std::move(text)};
  };

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (plus[a][b] != plus[b][a]) {
        return violation(Axiom::kE1, {a, b},
                         names[a] + " + " + names[b] + " and " + names[b] + " + " + names[a] + " differ");
      }
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto ab = plus[a][b];
      if (!ab) continue;
      for (Element c = 0; c < n; ++c) {
        const auto ab_c = plus[*ab][c];
        if (!ab_c) continue;
        const auto bc = plus[b][c];
        const auto a_bc = bc ? plus[a][*bc] : std::nullopt;
        if (!a_bc || *a_bc != *ab_c) {
          return violation(Axiom::kE2, {a, b, c},
                           "(" + names[a] + " + " + names[b] + ") + " + names[c] + " is defined but " + names[a] +
                               " + (" + names[b] + " + " + names[c] + ") is " + (a_bc ? "different" : "not"));
        }
      }
    }
  }

  std::vector<Element> supplement(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> found;
    for (Element b = 0; b < n; ++b) {
      if (plus[a][b] == raw.one) found.push_back(b);
    }
    if (found.size() != 1) {
      std::vector<Element> w{a};
      w.insert(w.end(), found.begin(), found.end());
      return violation(Axiom::kE3, std::move(w),
                       names[a] + " has " + std::to_string(found.size()) + " elements b with " + names[a] +
                           " + b = " + names[raw.one]);
    }
    supplement[a] = found.front();
  }

  for (Element a = 0; a < n; ++a) {
    if (a != raw.zero && plus[a][raw.one]) {
      return violation(Axiom::kE4, {a}, names[a] + " + " + names[raw.one] + " is defined");
    }
  }

  if (raw.supplement) {
    for (Element a = 0; a < n; ++a) {
      if ((*raw.supplement)[a] != supplement[a]) {
        return violation(Axiom::kSupplement, {a, (*raw.supplement)[a]},
                         "declared supplement of " + names[a] + " is " + names[(*raw.supplement)[a]] +
                             " but the table gives " + names[supplement[a]]);
      }
    }
  }

  Poset order;
  try {
    order = Poset::from_relation(n, [&](Element a, Element b) {
      for (Element c = 0; c < n; ++c) {
        if (plus[a][c] == b) return true;
      }
      return false;
    });
  } catch (const Error &e) {
    return violation(Axiom::kOrder, {}, std::string("induced relation: ") + e.what());
  }
  if (order.bottom() != raw.zero || order.top() != raw.one) {
    return violation(Axiom::kOrder, {order.bottom(), order.top()}, "induced order is not bounded by zero and one");
  }
  for (Element a = 0; a < n; ++a) {
    if (supplement[supplement[a]] != a) {
      return violation(Axiom::kOrder, {a}, "supplement is not an involution at " + names[a]);
    }
    for (Element b : order.up(a)) {
      if (!order.leq(supplement[b], supplement[a])) {
        return violation(Axiom::kOrder, {a, b}, "supplement is not antitone at " + names[a] + ", " + names[b]);
      }
    }
  }

  EffectAlgebra ea;
  ea.names_ = std::move(raw.names);
  for (Element e = 0; e < n; ++e) ea.index_.emplace(ea.names_[e], e);
  ea.plus_.assign(n * n, -1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (plus[a][b]) ea.plus_[a * n + b] = static_cast<std::int16_t>(*plus[a][b]);
    }
  }
  ea.supplement_ = std::move(supplement);
  ea.zero_ = raw.zero;
  ea.one_ = raw.one;
  ea.order_ = std::move(order);
  return ea;
}

EffectAlgebra EffectAlgebra::from_raw(RawAlgebra raw) {
  auto result = verify_axioms(std::move(raw));
  if (auto *v = std::get_if<AxiomViolation>(&result)) throw AxiomError(std::move(*v));
  return std::get<EffectAlgebra>(std::move(result));
}

Element EffectAlgebra::element(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement("unknown element '" + std::string(name) + "'");
  return it->second;
}

std::optional<Element> EffectAlgebra::plus(Element a, Element b) const {
  if (a >= size() || b >= size()) throw UnknownElement("element index out of range");
  const auto v = plus_[a * size() + b];
  if (v < 0) return std::nullopt;
  return static_cast<Element>(v);
}

ElementSet EffectAlgebra::supplement(ElementSet a) const {
  ElementSet r;
  for (Element x : a) r.insert(supplement(x));
  return r;
}

std::optional<Element> EffectAlgebra::odot(Element a, Element b) const {
  const auto s = plus(supplement(a), supplement(b));
  if (!s) return std::nullopt;
  return supplement(*s);
}

std::optional<ElementSet> EffectAlgebra::plus_set(ElementSet a, ElementSet b) const {
  ElementSet r;
  for (Element x : a) {
    for (Element y : b) {
      const auto s = plus(x, y);
      if (!s) return std::nullopt;
      r.insert(*s);
    }
  }
  return r;
}

std::optional<ElementSet> EffectAlgebra::odot_set(ElementSet a, ElementSet b) const {
  ElementSet r;
  for (Element x : a) {
    for (Element y : b) {
      const auto s = odot(x, y);
      if (!s) return std::nullopt;
      r.insert(*s);
    }
  }
  return r;
}

RawAlgebra EffectAlgebra::raw() const {
  RawAlgebra r;
  r.names = names_;
  r.zero = zero_;
  r.one = one_;
  r.supplement = supplement_;
  r.plus.assign(size(), std::vector<std::optional<Element>>(size()));
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) r.plus[a][b] = plus(a, b);
  }
  return r;
}

bool induced_leq(const EffectAlgebra &ea, Element a, Element b) {
  for (Element c = 0; c < ea.size(); ++c) {
    if (ea.plus(a, c) == b) return true;
  }
  return false;
}

Report check_basic_laws(const EffectAlgebra &ea, unsigned jobs) {
  const std::uint64_t n = ea.size();
  const auto &nm = [&](Element e) -> const std::string & { return ea.name(e); };
  using Witness = std::optional<std::string>;
  auto pair_law = [&](std::string id, std::string text, auto law) {
    return make_check(std::move(id), std::move(text), sweep_all(n * n, jobs, [&](std::uint64_t i) -> Witness {
                        const Element a = i % n, b = i / n;
                        if (law(a, b)) return std::nullopt;
                        return nm(a) + ", " + nm(b);
                      }));
  };
  auto triple_law = [&](std::string id, std::string text, auto law) {
    return make_check(std::move(id), std::move(text), sweep_all(n * n * n, jobs, [&](std::uint64_t i) -> Witness {
                        const Element a = i % n, b = (i / n) % n, c = i / (n * n);
                        if (law(a, b, c)) return std::nullopt;
                        return nm(a) + ", " + nm(b) + ", " + nm(c);
                      }));
  };
  const Element zero = ea.zero(), one = ea.one();
  auto sup = [&](Element a) { return ea.supplement(a); };

  Report rep;
  rep.add(pair_law("ea.induced-order", "the stored order agrees with: a <= b iff a + c = b for some c",
                   [&](Element a, Element b) { return ea.leq(a, b) == induced_leq(ea, a, b); }));
  rep.add(pair_law("ea.orthogonality", "a + b is defined iff a <= b'",
                   [&](Element a, Element b) { return ea.orthogonal(a, b) == ea.plus(a, b).has_value(); }));
  rep.add(pair_law("ea.bounded-involution", "bounded poset; ' is an antitone involution", [&](Element a, Element b) {
    if (!ea.leq(zero, a) || !ea.leq(a, one) || sup(sup(a)) != a) return false;
    return !ea.leq(a, b) || ea.leq(sup(b), sup(a));
  }));
  rep.add(pair_law("ea.units", "a + 0 = a (.) 1 = a",
                   [&](Element a, Element) { return ea.plus(a, zero) == a && ea.odot(a, one) == a; }));
  rep.add(pair_law("ea.complements", "a + a' = 1 and a (.) a' = 0",
                   [&](Element a, Element) { return ea.plus(a, sup(a)) == one && ea.odot(a, sup(a)) == zero; }));
  rep.add(pair_law("ea.sum-bounds", "a, b <= a + b and a (.) b <= a, b", [&](Element a, Element b) {
    if (auto s = ea.plus(a, b); s && !(ea.leq(a, *s) && ea.leq(b, *s))) return false;
    if (auto p = ea.odot(a, b); p && !(ea.leq(*p, a) && ea.leq(*p, b))) return false;
    return true;
  }));
  rep.add(pair_law("ea.recover-lower", "a <= b implies a = b (.) (a + b') = (b' + (a + b')')'", [&](Element a, Element b) {
    if (!ea.leq(a, b)) return true;
    const auto s = ea.plus(a, sup(b));
    if (!s) return false;
    const auto lhs = ea.odot(b, *s);
    const auto inner = ea.plus(sup(b), sup(*s));
    return lhs == a && inner && sup(*inner) == a;
  }));
  rep.add(pair_law("ea.recover-upper", "a <= b implies b = a + (a' (.) b) = a + (a + b')'", [&](Element a, Element b) {
    if (!ea.leq(a, b)) return true;
    const auto m = ea.odot(sup(a), b);
    const auto s = ea.plus(a, sup(b));
    if (!m || !s) return false;
    return ea.plus(a, *m) == b && ea.plus(a, sup(*s)) == b;
  }));
  rep.add(triple_law("ea.sum-monotone", "a <= b and b + c defined imply a + c defined and a + c <= b + c",
                     [&](Element a, Element b, Element c) {
                       const auto bc = ea.plus(b, c);
                       if (!ea.leq(a, b) || !bc) return true;
                       const auto ac = ea.plus(a, c);
                       return ac && ea.leq(*ac, *bc);
                     }));
  rep.add(triple_law("ea.product-monotone", "a <= b and a (.) c defined imply b (.) c defined and a (.) c <= b (.) c",
                     [&](Element a, Element b, Element c) {
                       const auto ac = ea.odot(a, c);
                       if (!ea.leq(a, b) || !ac) return true;
                       const auto bc = ea.odot(b, c);
                       return bc && ea.leq(*ac, *bc);
                     }));
  rep.add(triple_law("ea.sum-cancel", "a + b = a + c implies b = c", [&](Element a, Element b, Element c) {
    const auto ab = ea.plus(a, b), ac = ea.plus(a, c);
    return !(ab && ac && *ab == *ac) || b == c;
  }));
  rep.add(triple_law("ea.product-cancel", "a (.) b = a (.) c implies b = c", [&](Element a, Element b, Element c) {
    const auto ab = ea.odot(a, b), ac = ea.odot(a, c);
    return !(ab && ac && *ab == *ac) || b == c;
  }));
  return rep;
}

}  // namespace unsharp
