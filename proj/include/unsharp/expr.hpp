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

// Expressions over named propositions, evaluated to set propositions.
//
//   e ::= e => e          implication, right associative, lowest precedence
//       | e + e           partial sum
//       | e & e | e . e   conjunction and partial product
//       | e'              supplement
//       | X(e) | X*Y(e)   tense operator applied to phi(e); X, Y in P F H G
//       | X(phi(e))       same as X(e)
//       | name | (e)
//
// The Unicode spellings ⇒ ⊗ ⊙ ′ φ are accepted as well.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unsharp/formats.hpp"
#include "unsharp/tense.hpp"

namespace unsharp {

struct ExprNode;

class Expression {
 public:
  /// Throws ParseError (line 1, column of the offending character).
  static Expression parse(std::string_view text);

  const std::string &text() const { return text_; }

  /// Throws Error for unknown names, UndefinedAt for an undefined + or product.
  SetProposition evaluate(const EffectAlgebra &ea, const TimeFrame &frame, const NamedPropositions &props) const;

 private:
  std::string text_;
  std::shared_ptr<const ExprNode> root_;
};

}  // namespace unsharp
