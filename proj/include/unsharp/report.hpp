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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace unsharp {

enum class Status {
  kPass,
  kFail,
  /// The hypothesis of a conditional theorem failed; the conclusion was not checked.
  kHypothesisFailed,
};

const char *to_string(Status s);

/// Outcome of one named law, quantified over a finite (possibly sampled) domain.
struct CheckResult {
  std::string id;
  std::string description;
  Status status = Status::kPass;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool sampled = false;
  /// Rendering of the smallest failing case (or of the refuting hypothesis instance).
  std::string witness;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const Report &other);

  const std::vector<CheckResult> &checks() const { return checks_; }
  /// No check has status kFail.
  bool ok() const;
  std::size_t count(Status s) const;
  const CheckResult *find(const std::string &id) const;

 private:
  std::vector<CheckResult> checks_;
};

/// Controls exhaustive-versus-sampled quantification.
struct SweepOptions {
  /// Domains up to this size are enumerated completely.
  std::uint64_t exhaustive_limit = 10'000;
  /// Number of random draws for larger domains.
  std::uint64_t sample_size = 10'000;
  std::uint64_t seed = 0x5eed'2024U;
  unsigned jobs = 1;
};

/// Result of quantifying a predicate over a domain of indices.
struct SweepOutcome {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool sampled = false;
  std::optional<std::uint64_t> first_failure;
  std::string witness;
};

/// Predicate over a domain index. Returns a witness description on failure and
/// nothing on success. Indices for which the law is vacuous should count as success.
using CasePredicate = std::function<std::optional<std::string>(std::uint64_t)>;

/// Evaluates `pred` over [0, domain) or, when the domain is larger than the
/// exhaustive limit, over `sample_size` seeded random indices. Work is split over
/// `jobs` threads; the reported witness is always that of the smallest failing
/// index, so results do not depend on the thread count.
SweepOutcome sweep(std::uint64_t domain, const SweepOptions &opts, const CasePredicate &pred);

/// Like sweep() but never samples.
SweepOutcome sweep_all(std::uint64_t domain, unsigned jobs, const CasePredicate &pred);

/// Runs fn(worker, begin, end) over contiguous chunks of [0, count) on `jobs` threads.
void parallel_chunks(std::uint64_t count, unsigned jobs,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)> &fn);

/// Packs a sweep outcome into a report entry.
CheckResult make_check(std::string id, std::string description, const SweepOutcome &o);

/// Decomposes `index` into mixed-radix digits, least significant first.
std::vector<std::uint64_t> digits(std::uint64_t index, const std::vector<std::uint64_t> &radix);

/// SplitMix64 step: advances `state` and returns the next mixed value.
inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Product of `radix` entries, or nothing on 64-bit overflow.
std::optional<std::uint64_t> domain_size(const std::vector<std::uint64_t> &radix);

}  // namespace unsharp
