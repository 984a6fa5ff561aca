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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unsharp/element_set.hpp"
#include "unsharp/error.hpp"
#include "unsharp/poset.hpp"
#include "unsharp/report.hpp"

namespace unsharp {

/// An unvalidated partial algebra (E, +, 0, 1) as read from a table.
struct RawAlgebra {
  std::vector<std::string> names;
  /// plus[a][b]; nullopt marks an undefined sum.
  std::vector<std::vector<std::optional<Element>>> plus;
  Element zero = 0;
  Element one = 0;
  /// Optional transcription of the supplement map, cross-checked on validation.
  std::optional<std::vector<Element>> supplement;
};

enum class Axiom {
  kE1,  ///< commutativity
  kE2,  ///< associativity
  kE3,  ///< unique supplement
  kE4,  ///< a + 1 defined only for a = 0
  kSupplement,  ///< the declared supplement disagrees with the table
  kOrder,  ///< the induced relation is not a bounded order with antitone involution
};

const char *to_string(Axiom a);

/// First violated axiom of a rejected table, with the elements that witness it.
struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;
  std::string message;
};

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomViolation v) : Error(v.message), violation_(std::move(v)) {}
  const AxiomViolation &violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

class EffectAlgebra;

/// Checks (E1)-(E4) and the induced order. Throws Error only for structurally
/// malformed input (non-square table, ids out of range, more than 64 elements).
std::variant<EffectAlgebra, AxiomViolation> verify_axioms(RawAlgebra raw);

/// A validated finite effect algebra (E, +, ', 0, 1) with its induced order.
/// Immutable; every query is const and thread-safe.
class EffectAlgebra {
 public:
  /// verify_axioms() that throws AxiomError on rejection.
  static EffectAlgebra from_raw(RawAlgebra raw);

  std::size_t size() const { return names_.size(); }
  ElementSet carrier() const { return ElementSet::first_n(size()); }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  const std::string &name(Element e) const { return names_.at(e); }
  const std::vector<std::string> &names() const { return names_; }
  /// Throws UnknownElement.
  Element element(std::string_view name) const;

  std::optional<Element> plus(Element a, Element b) const;
  Element supplement(Element a) const { return supplement_.at(a); }
  ElementSet supplement(ElementSet a) const;
  /// a (.) b = (a' + b')'
  std::optional<Element> odot(Element a, Element b) const;

  const Poset &order() const { return order_; }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }
  /// a is orthogonal to b iff a <= b'.
  bool orthogonal(Element a, Element b) const { return leq(a, supplement(b)); }
  bool is_lattice() const { return order_.is_lattice(); }

  /// A + B, defined only if every a + b is.
  std::optional<ElementSet> plus_set(ElementSet a, ElementSet b) const;
  std::optional<ElementSet> odot_set(ElementSet a, ElementSet b) const;

  /// The table this algebra was built from, with the supplement filled in.
  RawAlgebra raw() const;

 private:
  friend std::variant<EffectAlgebra, AxiomViolation> verify_axioms(RawAlgebra raw);
  EffectAlgebra() = default;

  std::vector<std::string> names_;
  std::map<std::string, Element, std::less<>> index_;
  std::vector<std::int16_t> plus_;  // row-major, -1 = undefined
  std::vector<Element> supplement_;
  Element zero_ = 0;
  Element one_ = 0;
  Poset order_;
};

/// a <= b straight from the definition: some c has a + c = b.
bool induced_leq(const EffectAlgebra &ea, Element a, Element b);

/// The standard identities of effect algebras (units, complements, bounds,
/// recovery of a from b, monotonicity, cancellation) and the antitone
/// involution property of the supplement, exhaustively over all triples.
Report check_basic_laws(const EffectAlgebra &ea, unsigned jobs = 1);

}  // namespace unsharp
