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

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "unsharp/element_set.hpp"

namespace unsharp {

/// A finite bounded poset on the indices {0, ..., n-1}.
///
/// The order is stored as one up-set and one down-set bitmask per element, so
/// every query below is a handful of word operations. Finite posets satisfy
/// both chain conditions, hence Max and Min of a nonempty set are nonempty.
class Poset {
 public:
  /// The empty placeholder; not a bounded poset.
  Poset() = default;

  /// Builds the poset from a membership predicate for `leq`.
  /// Throws Error if the relation is not a bounded partial order.
  static Poset from_relation(std::size_t n, const std::function<bool(Element, Element)> &leq);

  std::size_t size() const { return up_.size(); }
  ElementSet elements() const { return ElementSet::first_n(size()); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return up_.at(a).contains(b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  /// {x | a <= x}
  ElementSet up(Element a) const { return up_.at(a); }
  /// {x | x <= a}
  ElementSet down(Element a) const { return down_.at(a); }

  /// U(A): common upper bounds. U({}) is the whole carrier.
  ElementSet upper_bounds(ElementSet a) const;
  /// L(A): common lower bounds. L({}) is the whole carrier.
  ElementSet lower_bounds(ElementSet a) const;
  /// Max A. Throws Error on empty input.
  ElementSet max_of(ElementSet a) const;
  /// Min A. Throws Error on empty input.
  ElementSet min_of(ElementSet a) const;

  // Set comparisons.
  bool leq1(ElementSet a, ElementSet b) const;
  bool leq2(ElementSet a, ElementSet b) const;
  bool sqsub(ElementSet a, ElementSet b) const;
  bool approx1(ElementSet a, ElementSet b) const { return leq1(a, b) && leq1(b, a); }
  bool approx2(ElementSet a, ElementSet b) const { return leq2(a, b) && leq2(b, a); }
  /// A <= B in the all-pairs sense: a <= b for every a in A and every b in B.
  bool all_leq(ElementSet a, ElementSet b) const;

  bool is_antichain(ElementSet a) const;
  /// Every pair has a join and a meet.
  bool is_lattice() const;
  /// Cover pairs (a, b), a < b with nothing strictly between, sorted by (a, b).
  std::vector<std::pair<Element, Element>> covers() const;

 private:
  void check_members(ElementSet a) const;

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  Element bottom_ = 0;
  Element top_ = 0;
};

}  // namespace unsharp
