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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unsharp/tense.hpp"

namespace unsharp {

/// Given tense operators P, F, H, G on propositions over a time set, either
/// induced by a frame or listed extensionally. Extensional tables hold values
/// for particular propositions plus optional per-operator defaults ("*") that
/// apply to every proposition without an explicit value.
class OperatorTable {
 public:
  using Values = std::vector<std::optional<ElementSet>>;

  static OperatorTable induced(const EffectAlgebra &ea, const TimeFrame &frame);
  explicit OperatorTable(std::vector<std::string> times);

  /// Records X(p)(t) = value. Throws Error for an empty value or a bad time point.
  void set(TenseOp op, const Proposition &p, TimePoint t, ElementSet value);
  /// Records the default X(.)(t) = value.
  void set_default(TenseOp op, TimePoint t, ElementSet value);

  std::size_t size() const { return times_.size(); }
  const std::vector<std::string> &times() const { return times_; }
  const TimeFrame *source() const { return source_ ? &*source_ : nullptr; }

  /// X(p) on every time point. Throws FrameError where no value is known.
  SetProposition apply(const EffectAlgebra &ea, TenseOp op, const Proposition &p) const;
  std::array<SetProposition, 4> apply_all(const EffectAlgebra &ea, const Proposition &p) const;

  /// Throws FrameError naming the first (operator, proposition, time) without a value.
  void check_total(const EffectAlgebra &ea) const;

 private:
  std::vector<std::string> times_;
  std::optional<TimeFrame> source_;
  std::map<std::pair<TenseOp, Proposition>, Values> explicit_;
  std::array<Values, 4> defaults_;
};

struct InducedRelation {
  std::vector<std::pair<TimePoint, TimePoint>> pairs;
  std::uint64_t propositions = 0;
  /// When set, only sampled propositions were used, so `pairs` may be too large.
  bool sampled = false;
};

/// R*: every (s, t) with H(p)(t) <= p(s) <= P(p)(t) and G(p)(s) <= p(t) <= F(p)(s)
/// for all p, a set on one side of <= meaning every member.
InducedRelation induce_relation(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts = {});

/// (T, R*) as a frame over the table's time ids.
TimeFrame induced_frame(const OperatorTable &ops, const InducedRelation &rel);

/// P* <=_2 P, F* <=_2 F, H <=_1 H*, G <=_1 G* for the operators of (T, R*).
/// Reported as kHypothesisFailed when R* is not serial.
Report check_induced_bounds(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts = {});

/// For operators induced by `frame`: R is contained in R*, the equivalences
/// P* ~_2 P, F* ~_2 F, H* ~_1 H and G* ~_1, ~_2 G, and exact equality.
Report check_induced_equivalence(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts = {});

/// (T-bar, R-bar). Time points are ordered (t,1) for all t, then T, then (t,2).
class ExtendedFrame {
 public:
  ExtendedFrame(const OperatorTable &ops, const InducedRelation &rel);

  const TimeFrame &frame() const { return frame_; }
  std::size_t base_size() const { return base_; }
  TimePoint past(TimePoint t) const { return t; }
  TimePoint present(TimePoint t) const { return base_ + t; }
  TimePoint future(TimePoint t) const { return 2 * base_ + t; }

  /// Every selection p-bar (with `past_op` = P, `future_op` = F) or p-hat (H, G)
  /// over the extended time set, given the values X(p) from the table.
  /// Throws CapExceeded beyond `cap` selections.
  PropositionFamily selections(const Proposition &p, const SetProposition &past_values,
                               const SetProposition &future_values, std::uint64_t cap = kDefaultPhiCap) const;

 private:
  std::size_t base_;
  TimeFrame frame_;
};

ExtendedFrame extend_frame(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts = {});

/// Selections beyond this count per proposition are sampled.
inline constexpr std::uint64_t kSelectionCap = 4096;

/// Restricting the extended-frame operators to T: P-bar(p-bar)|T within P(p)
/// and the three siblings for every selection, P-bar(p-bar)(s) = {p-bar((s,1))},
/// and equality when the values for p are singletons.
Report check_extension(const EffectAlgebra &ea, const OperatorTable &ops, const SweepOptions &opts = {});

}  // namespace unsharp
