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

#include "unsharp/random_algebra.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace unsharp {

namespace {

using Point = std::vector<int>;

std::vector<Point> box(const Point &u) {
  std::vector<Point> out{Point(u.size(), 0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Point> next;
    for (const auto &p : out) {
      for (int v = 0; v <= u[i]; ++v) {
        Point q = p;
        q[i] = v;
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Point complement(const Point &u, const Point &x) {
  Point c(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) c[i] = u[i] - x[i];
  return c;
}

std::string name_of(const Point &p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace

std::vector<EffectAlgebra> random_effect_algebras(std::size_t count, std::uint64_t seed, std::size_t max_size) {
  std::mt19937_64 gen(seed);
  std::vector<EffectAlgebra> out;
  std::set<std::pair<Point, std::vector<Point>>> seen;
  const std::size_t max_attempts = 200000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    const std::size_t k = 1 + gen() % 3;
    Point u(k);
    for (auto &c : u) c = 1 + static_cast<int>(gen() % 3);
    const Point zero(k, 0);
    // Complementary pairs other than {0, u}, each kept with probability 1/2.
    std::vector<Point> members{zero, u};
    for (const auto &x : box(u)) {
      const Point c = complement(u, x);
      if (x == zero || x == u || c < x) continue;
      if (gen() & 1U) {
        members.push_back(x);
        if (c != x) members.push_back(c);
      }
    }
    if (members.size() > max_size) continue;
    std::sort(members.begin(), members.end());
    if (!seen.insert({u, members}).second) continue;

    RawAlgebra raw;
    const std::size_t n = members.size();
    for (const auto &m : members) raw.names.push_back(name_of(m));
    raw.plus.assign(n, std::vector<std::optional<Element>>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Point s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = members[a][i] + members[b][i];
        const auto it = std::lower_bound(members.begin(), members.end(), s);
        if (it != members.end() && *it == s) raw.plus[a][b] = static_cast<Element>(it - members.begin());
      }
    }
    raw.zero = 0;
    raw.one = static_cast<Element>(std::find(members.begin(), members.end(), u) - members.begin());
    auto checked = verify_axioms(raw);
    if (auto *ea = std::get_if<EffectAlgebra>(&checked)) out.push_back(std::move(*ea));
  }
  if (out.size() < count) {
    throw Error("found only " + std::to_string(out.size()) + " effect algebras of size <= " + std::to_string(max_size));
  }
  return out;
}

}  // namespace unsharp
