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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/report.hpp"

namespace unsharp {

/// Time points are indices into a TimeFrame; sets of them reuse the 64-bit set type.
using TimePoint = std::size_t;
using TimeSet = ElementSet;

/// A time-dependent event: one element per time point.
using Proposition = std::vector<Element>;
/// One nonempty set of elements per time point.
using SetProposition = std::vector<ElementSet>;
/// A nonempty set of propositions.
using PropositionFamily = std::vector<Proposition>;

enum class TenseOp { kP, kF, kH, kG };

inline constexpr std::array<TenseOp, 4> kTenseOps = {TenseOp::kP, TenseOp::kF, TenseOp::kH, TenseOp::kG};

char to_char(TenseOp op);
std::optional<TenseOp> tense_op_from_char(char c);

/// A finite time set T with a nonempty preference relation R; "s R t" reads
/// "s is before t".
class TimeFrame {
 public:
  TimeFrame() = default;
  /// Throws FrameError on duplicate or unknown time ids, an empty relation, or
  /// more than 64 time points.
  TimeFrame(std::vector<std::string> times, const std::vector<std::pair<TimePoint, TimePoint>> &rel);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(TimePoint t) const { return names_.at(t); }
  /// Throws FrameError for an unknown id.
  TimePoint index(std::string_view name) const;

  bool related(TimePoint s, TimePoint t) const { return after_.at(s).contains(t); }
  /// {t | t R s}
  TimeSet before(TimePoint s) const { return before_.at(s); }
  /// {t | s R t}
  TimeSet after(TimePoint s) const { return after_.at(s); }
  /// All pairs (s, t) with s R t, sorted.
  std::vector<std::pair<TimePoint, TimePoint>> pairs() const;

  /// Every point has a predecessor and a successor.
  bool serial() const;
  bool reflexive() const;

 private:
  std::vector<std::string> names_;
  std::vector<TimeSet> before_;
  std::vector<TimeSet> after_;
};

// Operators induced by a frame. P and H look at predecessors (t R s), F and G
// at successors (s R t); P and F take Min U of the collected values, H and G
// take Max L.

/// Value of X(B) at a single point. Throws FrameError if nothing is collected there.
ElementSet tense_at(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const PropositionFamily &family,
                    TimePoint s);

/// X(B) on every time point. Requires a serial frame and a nonempty family.
SetProposition tense_apply(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op,
                           const PropositionFamily &family);

/// X({p})
SetProposition tense_apply(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const Proposition &p);

/// X(phi(x)) evaluated as Min U / Max L of the union of x(t) over the relevant
/// segment, without materializing phi(x).
SetProposition tense_of_union(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op,
                              const SetProposition &x);

inline constexpr std::uint64_t kDefaultPhiCap = 1'000'000;

/// phi(x): every proposition q with q(t) in x(t) for all t, in lexicographic
/// order of canonical element order. Throws CapExceeded beyond `cap` members.
PropositionFamily phi(const SetProposition &x, std::uint64_t cap = kDefaultPhiCap);

/// X(phi(x)) through an explicit phi.
SetProposition apply_phi(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp op, const SetProposition &x,
                         std::uint64_t cap = kDefaultPhiCap);

/// (X * Y)(B) = X(phi(Y(B)))
SetProposition compose(const EffectAlgebra &ea, const TimeFrame &frame, TenseOp outer, TenseOp inner,
                       const PropositionFamily &family, std::uint64_t cap = kDefaultPhiCap);

enum class PointwiseOp { kOtimes, kImpDouble, kOdot, kPlus };

/// An operation left undefined at a time point.
class UndefinedAt : public UndefinedOperation {
 public:
  UndefinedAt(TimePoint t, const std::string &what) : UndefinedOperation(what), time_(t) {}
  TimePoint time() const { return time_; }

 private:
  TimePoint time_;
};

/// Applies the set-lifted operation at each time point. (x) and => never fail;
/// (.) and + throw UndefinedAt where the set operation is undefined.
SetProposition pointwise(const EffectAlgebra &ea, PointwiseOp op, const SetProposition &x,
                         const SetProposition &y);

SetProposition lift(const Proposition &p);
Proposition supplement(const EffectAlgebra &ea, const Proposition &p);
SetProposition supplement(const EffectAlgebra &ea, const SetProposition &x);
PropositionFamily supplement(const EffectAlgebra &ea, const PropositionFamily &family);

/// Pointwise comparison of set propositions under one of the set relations.
enum class SetRelation { kLeq1, kLeq2, kSqsub, kApprox1, kApprox2, kAllLeq, kEqual };
bool holds_pointwise(const Poset &order, SetRelation rel, const SetProposition &x, const SetProposition &y);

/// |E|^|T|, or nothing on overflow.
std::optional<std::uint64_t> proposition_count(const EffectAlgebra &ea, std::size_t times);
/// The proposition with mixed-radix code `index` (time 0 is the least significant digit).
Proposition proposition_at(const EffectAlgebra &ea, std::size_t times, std::uint64_t index);
std::uint64_t proposition_index(const EffectAlgebra &ea, const Proposition &p);

/// Dynamic effect algebra axioms (top preserved, monotone, additive, round
/// trips) for the H and G induced by a serial frame, with P and F obtained
/// by duality, plus the consistency of that duality with the direct P and F.
/// Exhaustive over propositions (and pairs) up to the sweep limit.
Report check_dynamic_axioms(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts = {});

/// phi laws (injectivity, singleton behavior, order reflection) and the four
/// parts of the operator proposition, plus H(p) <= p <= P(p), G(p) <= p <= F(p)
/// when the relation is reflexive.
Report check_tense_laws(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts = {});

/// Compatibility of tense operators with => and (x). For every operator triple
/// the hypothesis is sampled (or enumerated when small) and the conclusion is
/// checked over all proposition pairs, or over `only` when given. Triples
/// whose hypothesis is refuted are reported as kHypothesisFailed.
Report check_compatibility(const EffectAlgebra &ea, const TimeFrame &frame, const SweepOptions &opts = {},
                           const std::vector<Proposition> *only = nullptr);

}  // namespace unsharp
