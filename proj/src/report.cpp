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

#include "unsharp/report.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace unsharp {

const char *to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kHypothesisFailed:
      return "hypothesis-failed";
  }
  return "?";
}

void Report::append(const Report &other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const { return count(Status::kFail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const CheckResult &c) { return c.status == s; }));
}

const CheckResult *Report::find(const std::string &id) const {
  for (const auto &c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

SweepOutcome run_indices(std::uint64_t count, unsigned jobs, const std::function<std::uint64_t(std::uint64_t)> &index_of,
                         const CasePredicate &pred) {
  struct Partial {
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first;
    std::string witness;
  };
  jobs = std::max(1U, jobs);
  if (count < 64) jobs = 1;
  std::vector<Partial> parts(jobs);
  auto work = [&](unsigned w) {
    Partial &part = parts[w];
    for (std::uint64_t k = w; k < count; k += jobs) {
      const std::uint64_t idx = index_of(k);
      if (auto bad = pred(idx)) {
        ++part.failures;
        if (!part.first || idx < *part.first) {
          part.first = idx;
          part.witness = std::move(*bad);
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto &t : threads) t.join();
  }
  SweepOutcome out;
  out.cases = count;
  for (auto &p : parts) {
    out.failures += p.failures;
    if (p.first && (!out.first_failure || *p.first < *out.first_failure)) {
      out.first_failure = p.first;
      out.witness = std::move(p.witness);
    }
  }
  return out;
}

}  // namespace

SweepOutcome sweep_all(std::uint64_t domain, unsigned jobs, const CasePredicate &pred) {
  return run_indices(domain, jobs, [](std::uint64_t k) { return k; }, pred);
}

SweepOutcome sweep(std::uint64_t domain, const SweepOptions &opts, const CasePredicate &pred) {
  if (domain <= opts.exhaustive_limit) return sweep_all(domain, opts.jobs, pred);
  // Draw the sample up front so that the chosen indices are independent of the thread count.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, domain - 1);
  std::vector<std::uint64_t> sample(opts.sample_size);
  for (auto &s : sample) s = pick(rng);
  SweepOutcome out = run_indices(sample.size(), opts.jobs, [&](std::uint64_t k) { return sample[k]; }, pred);
  out.sampled = true;
  return out;
}

void parallel_chunks(std::uint64_t count, unsigned jobs,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)> &fn) {
  jobs = std::max(1U, jobs);
  if (count < jobs) jobs = 1;
  if (jobs == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t step = (count + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min(count, w * step);
    const std::uint64_t end = std::min(count, begin + step);
    threads.emplace_back(fn, w, begin, end);
  }
  for (auto &t : threads) t.join();
}

CheckResult make_check(std::string id, std::string description, const SweepOutcome &o) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = o.failures == 0 ? Status::kPass : Status::kFail;
  r.cases = o.cases;
  r.failures = o.failures;
  r.sampled = o.sampled;
  r.witness = o.witness;
  return r;
}

std::vector<std::uint64_t> digits(std::uint64_t index, const std::vector<std::uint64_t> &radix) {
  std::vector<std::uint64_t> d(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    d[i] = index % radix[i];
    index /= radix[i];
  }
  return d;
}

std::optional<std::uint64_t> domain_size(const std::vector<std::uint64_t> &radix) {
  std::uint64_t n = 1;
  for (auto r : radix) {
    if (r != 0 && n > UINT64_MAX / r) return std::nullopt;
    n *= r;
  }
  return n;
}

}  // namespace unsharp
