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

#include "unsharp/expr.hpp"

#include <cctype>

namespace unsharp {

struct ExprNode {
  enum class Kind { kName, kTense, kBinary, kSupplement };
  Kind kind = Kind::kName;
  std::string name;
  std::vector<TenseOp> ops;  // outermost first
  PointwiseOp binary = PointwiseOp::kOtimes;
  std::shared_ptr<const ExprNode> left, right;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    auto e = implication();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(1, pos_ + 1, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  NodePtr binary(PointwiseOp op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::kBinary;
    n->binary = op;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
  }

  NodePtr implication() {
    auto l = sum();
    if (eat("=>") || eat("⇒")) return binary(PointwiseOp::kImpDouble, l, implication());
    return l;
  }

  NodePtr sum() {
    auto l = product();
    while (eat("+")) l = binary(PointwiseOp::kPlus, l, product());
    return l;
  }

  NodePtr product() {
    auto l = postfix();
    while (true) {
      if (eat("&") || eat("⊗")) {
        l = binary(PointwiseOp::kOtimes, l, postfix());
      } else if (eat(".") || eat("⊙")) {
        l = binary(PointwiseOp::kOdot, l, postfix());
      } else {
        return l;
      }
    }
  }

  NodePtr postfix() {
    auto e = primary();
    while (eat("'") || eat("′")) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::kSupplement;
      n->left = e;
      e = n;
    }
    return e;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_paren() {
    skip();
    return pos_ < s_.size() && s_[pos_] == '(';
  }

  NodePtr parenthesized() {
    if (!eat("(")) fail("expected '('");
    auto e = implication();
    if (!eat(")")) fail("expected ')'");
    return e;
  }

  /// The argument of a tense operator; an explicit phi(...) wrapper is optional.
  NodePtr tense_argument() {
    if (!eat("(")) fail("expected '('");
    const std::size_t save = pos_;
    NodePtr e;
    const bool unicode_phi = eat("φ");
    if (unicode_phi || identifier() == "phi") {
      if (at_paren()) {
        e = parenthesized();
      } else {
        pos_ = save;
        e = implication();
      }
    } else {
      pos_ = save;
      e = implication();
    }
    if (!eat(")")) fail("expected ')'");
    return e;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (s_[pos_] == '(') return parenthesized();
    const std::size_t start = pos_;
    if (eat("φ")) fail("phi is only allowed as the argument of a tense operator");
    std::string id = identifier();
    if (id.empty()) fail("expected a proposition name");
    std::vector<TenseOp> ops;
    // A tense operator is one of P F H G followed by '(' or by '*' and another operator.
    while (id.size() == 1 && tense_op_from_char(id[0])) {
      skip();
      const std::size_t after = pos_;
      if (at_paren()) {
        ops.push_back(*tense_op_from_char(id[0]));
        break;
      }
      if (eat("*")) {
        const std::string next = identifier();
        if (next.size() == 1 && tense_op_from_char(next[0])) {
          ops.push_back(*tense_op_from_char(id[0]));
          id = next;
          continue;
        }
        pos_ = after;
      }
      if (!ops.empty()) fail("expected '(' after a tense operator");
      break;
    }
    if (!ops.empty()) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::kTense;
      n->ops = std::move(ops);
      n->left = tense_argument();
      return n;
    }
    if (id == "phi") {
      pos_ = start;
      fail("phi is only allowed as the argument of a tense operator");
    }
    auto n = std::make_shared<ExprNode>();
    n->name = std::move(id);
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

SetProposition eval(const ExprNode &n, const EffectAlgebra &ea, const TimeFrame &frame,
                    const NamedPropositions &props) {
  switch (n.kind) {
    case ExprNode::Kind::kName: {
      const Proposition &p = props.get(n.name);
      if (p.size() != frame.size()) throw Error("proposition '" + n.name + "' does not match the frame");
      return lift(p);
    }
    case ExprNode::Kind::kSupplement:
      return supplement(ea, eval(*n.left, ea, frame, props));
    case ExprNode::Kind::kBinary:
      return pointwise(ea, n.binary, eval(*n.left, ea, frame, props), eval(*n.right, ea, frame, props));
    case ExprNode::Kind::kTense: {
      SetProposition x = eval(*n.left, ea, frame, props);
      for (auto it = n.ops.rbegin(); it != n.ops.rend(); ++it) x = tense_of_union(ea, frame, *it, x);
      return x;
    }
  }
  throw InvariantError("unknown expression node");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

SetProposition Expression::evaluate(const EffectAlgebra &ea, const TimeFrame &frame,
                                    const NamedPropositions &props) const {
  return eval(*root_, ea, frame, props);
}

}  // namespace unsharp
