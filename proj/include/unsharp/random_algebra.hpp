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
#include <vector>

#include "unsharp/effect_algebra.hpp"

namespace unsharp {

/// Distinct finite effect algebras with at most `max_size` elements. Each
/// candidate is a subset S of a box [0, u] in N^k (k <= 3, u_i <= 3) that
/// contains 0 and u and is closed under x -> u - x, with x + y defined as the
/// vector sum whenever that sum lies in S. Candidates failing the axioms are
/// discarded. Throws Error if `count` algebras are not found within a bounded
/// number of attempts.
std::vector<EffectAlgebra> random_effect_algebras(std::size_t count, std::uint64_t seed, std::size_t max_size = 8);

}  // namespace unsharp
