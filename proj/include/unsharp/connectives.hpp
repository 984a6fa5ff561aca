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

#include <optional>
#include <utility>
#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/report.hpp"

namespace unsharp {

// The unsharp connectives. A "set-valued" result is an antichain of elements;
// the caller decides whether a singleton is shown as a bare element.

/// b -> c = Max{x | x (.) b is defined and x (.) b <= c}
ElementSet imp_arrow(const EffectAlgebra &ea, Element b, Element c);

/// b ~> c = b' + c, defined iff c <= b.
std::optional<Element> imp_squig(const EffectAlgebra &ea, Element b, Element c);

/// b => c = b' + Max L(b, c)
ElementSet imp_double(const EffectAlgebra &ea, Element b, Element c);

/// a (x) b = Min U(a, b') (.) b
ElementSet otimes(const EffectAlgebra &ea, Element a, Element b);

/// Union of a (x) b over a in A, b in B.
ElementSet otimes_set(const EffectAlgebra &ea, ElementSet a, ElementSet b);

/// Union of a => b over a in A, b in B.
ElementSet imp_double_set(const EffectAlgebra &ea, ElementSet a, ElementSet b);

/// Max L(a, b), the maximal common lower bounds.
ElementSet max_lower(const EffectAlgebra &ea, Element a, Element b);

struct DualityResult {
  bool holds = true;
  /// First pair (a, b), in row-major order, where an identity fails.
  std::optional<std::pair<Element, Element>> witness;
};

/// Checks a (x) b = (b => a')' and a => b = (b' (x) a)' for every pair.
DualityResult duality_check(const EffectAlgebra &ea);

/// Precomputed -> / => / (x) for every pair, used by the exhaustive sweeps.
class ConnectiveTables {
 public:
  explicit ConnectiveTables(const EffectAlgebra &ea);

  const EffectAlgebra &algebra() const { return *ea_; }
  ElementSet arrow(Element b, Element c) const { return arrow_[b * n_ + c]; }
  ElementSet imp(Element b, Element c) const { return imp_[b * n_ + c]; }
  ElementSet otimes(Element a, Element b) const { return otimes_[a * n_ + b]; }
  ElementSet imp(ElementSet a, ElementSet b) const;
  ElementSet otimes(ElementSet a, ElementSet b) const;

 private:
  const EffectAlgebra *ea_;
  std::size_t n_;
  std::vector<ElementSet> arrow_;
  std::vector<ElementSet> imp_;
  std::vector<ElementSet> otimes_;
};

/// All implication and conjunction laws: units, monotonicity and adjointness of
/// each implication, Modus Ponens, the comparison of the three implications,
/// (x)/=> adjointness, divisibility and duality, the unit/counit inequalities,
/// and set-level adjointness (sampled over triples of nonempty subsets).
Report check_connective_laws(const EffectAlgebra &ea, const SweepOptions &opts = {});

}  // namespace unsharp
