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

// Internal helpers shared by the law checkers.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "unsharp/report.hpp"
#include "unsharp/tense.hpp"

namespace unsharp::detail {

using Witness = std::optional<std::string>;

/// Deterministic pseudo-random choices derived from a case index.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t index) : state_(seed ^ (index * 0xd1342543de82ef95ULL)) {}
  std::uint64_t next() { return splitmix64(state_); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Nonempty subset of the carrier: a singleton half of the time, otherwise up to `max_size` members.
  ElementSet subset(const EffectAlgebra &ea, std::size_t max_size) {
    ElementSet s = ElementSet::singleton(below(ea.size()));
    if (next() & 1U) return s;
    const std::size_t extra = below(max_size);
    for (std::size_t k = 0; k < extra; ++k) s.insert(below(ea.size()));
    return s;
  }
  Proposition proposition(const EffectAlgebra &ea, std::size_t times) {
    Proposition p(times);
    for (auto &v : p) v = below(ea.size());
    return p;
  }
  SetProposition set_proposition(const EffectAlgebra &ea, std::size_t times, std::size_t max_size) {
    SetProposition x(times);
    for (auto &s : x) s = subset(ea, max_size);
    return x;
  }
  PropositionFamily family(const EffectAlgebra &ea, std::size_t times, std::size_t max_members) {
    PropositionFamily f(1 + below(max_members));
    for (auto &p : f) p = proposition(ea, times);
    return f;
  }

 private:
  std::uint64_t state_;
};

/// Enumerates propositions (or pairs of them) exhaustively while |E|^|T| is
/// within the sweep limit, and samples them otherwise.
class PropositionDomain {
 public:
  PropositionDomain(const EffectAlgebra &ea, std::size_t times, const SweepOptions &opts)
      : ea_(ea), times_(times), opts_(opts), count_(proposition_count(ea, times)) {}

  bool exhaustive() const { return count_ && *count_ <= opts_.exhaustive_limit; }
  std::uint64_t count() const { return *count_; }

  Proposition at(std::uint64_t index) const { return proposition_at(ea_, times_, index); }

  SweepOutcome each(const std::function<Witness(const Proposition &)> &pred) const {
    if (exhaustive()) return sweep_all(count(), opts_.jobs, [&](std::uint64_t i) { return pred(at(i)); });
    return sweep(UINT64_MAX, opts_, [&](std::uint64_t i) {
      CaseRng rng(opts_.seed, i);
      return pred(rng.proposition(ea_, times_));
    });
  }

  SweepOutcome pairs(const std::function<Witness(const Proposition &, const Proposition &)> &pred) const {
    if (exhaustive()) {
      const std::uint64_t n = count();
      return sweep_all(n * n, opts_.jobs, [&](std::uint64_t i) { return pred(at(i % n), at(i / n)); });
    }
    return sweep(UINT64_MAX, opts_, [&](std::uint64_t i) {
      CaseRng rng(opts_.seed, i);
      const Proposition p = rng.proposition(ea_, times_);
      return pred(p, rng.proposition(ea_, times_));
    });
  }

 private:
  const EffectAlgebra &ea_;
  std::size_t times_;
  const SweepOptions &opts_;
  std::optional<std::uint64_t> count_;
};

}  // namespace unsharp::detail
