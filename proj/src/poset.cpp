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

#include "unsharp/poset.hpp"

#include <string>

#include "unsharp/error.hpp"

namespace unsharp {

Poset Poset::from_relation(std::size_t n, const std::function<bool(Element, Element)> &leq) {
  if (n == 0) throw Error("poset must have at least one element");
  if (n > kMaxElements) throw Error("poset has " + std::to_string(n) + " elements; at most 64 are supported");

  Poset p;
  p.up_.assign(n, ElementSet{});
  p.down_.assign(n, ElementSet{});
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (leq(a, b)) {
        p.up_[a].insert(b);
        p.down_[b].insert(a);
      }
    }
  }
  auto at = [](Element a, Element b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; };
  for (Element a = 0; a < n; ++a) {
    if (!p.up_[a].contains(a)) throw Error("order is not reflexive at " + std::to_string(a));
    for (Element b : p.up_[a]) {
      if (b != a && p.up_[b].contains(a)) throw Error("order is not antisymmetric at " + at(a, b));
      if (!p.up_[b].subset_of(p.up_[a])) throw Error("order is not transitive at " + at(a, b));
    }
  }
  const ElementSet all = ElementSet::first_n(n);
  bool have_bottom = false;
  bool have_top = false;
  for (Element a = 0; a < n; ++a) {
    if (p.up_[a] == all) {
      p.bottom_ = a;
      have_bottom = true;
    }
    if (p.down_[a] == all) {
      p.top_ = a;
      have_top = true;
    }
  }
  if (!have_bottom || !have_top) throw Error("order is not bounded");
  return p;
}

void Poset::check_members(ElementSet a) const {
  if (!a.subset_of(elements())) throw UnknownElement("set contains an element outside the carrier");
}

ElementSet Poset::upper_bounds(ElementSet a) const {
  check_members(a);
  ElementSet r = elements();
  for (Element x : a) r &= up_[x];
  return r;
}

ElementSet Poset::lower_bounds(ElementSet a) const {
  check_members(a);
  ElementSet r = elements();
  for (Element x : a) r &= down_[x];
  return r;
}

ElementSet Poset::max_of(ElementSet a) const {
  check_members(a);
  if (a.empty()) throw Error("Max of the empty set");
  ElementSet r;
  for (Element x : a) {
    if ((up_[x] & a) == ElementSet::singleton(x)) r.insert(x);
  }
  return r;
}

ElementSet Poset::min_of(ElementSet a) const {
  check_members(a);
  if (a.empty()) throw Error("Min of the empty set");
  ElementSet r;
  for (Element x : a) {
    if ((down_[x] & a) == ElementSet::singleton(x)) r.insert(x);
  }
  return r;
}

bool Poset::leq1(ElementSet a, ElementSet b) const {
  check_members(a);
  check_members(b);
  for (Element x : a) {
    if (!up_[x].intersects(b)) return false;
  }
  return true;
}

bool Poset::leq2(ElementSet a, ElementSet b) const {
  check_members(a);
  check_members(b);
  for (Element y : b) {
    if (!down_[y].intersects(a)) return false;
  }
  return true;
}

bool Poset::sqsub(ElementSet a, ElementSet b) const {
  check_members(a);
  check_members(b);
  for (Element x : a) {
    if (up_[x].intersects(b)) return true;
  }
  return false;
}

bool Poset::all_leq(ElementSet a, ElementSet b) const {
  check_members(a);
  check_members(b);
  for (Element x : a) {
    if (!b.subset_of(up_[x])) return false;
  }
  return true;
}

bool Poset::is_antichain(ElementSet a) const {
  for (Element x : a) {
    if ((up_[x] & a) != ElementSet::singleton(x)) return false;
  }
  return true;
}

bool Poset::is_lattice() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = a + 1; b < size(); ++b) {
      const ElementSet pair = ElementSet::singleton(a) | ElementSet::singleton(b);
      if (min_of(upper_bounds(pair)).size() != 1) return false;
      if (max_of(lower_bounds(pair)).size() != 1) return false;
    }
  }
  return true;
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size(); ++a) {
    const ElementSet above = up_[a] - ElementSet::singleton(a);
    if (above.empty()) continue;
    for (Element b : min_of(above)) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace unsharp
