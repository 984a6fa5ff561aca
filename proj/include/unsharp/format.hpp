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

#include <optional>
#include <string>
#include <vector>

#include "unsharp/effect_algebra.hpp"

namespace unsharp {

/// Renders a set as `{x,y}` in canonical order; singletons render as the bare
/// element and the empty set as `{}`.
std::string format_set(const EffectAlgebra &ea, ElementSet s);

/// Renders a partial result; nullopt renders as `-`.
std::string format_partial(const EffectAlgebra &ea, std::optional<Element> e);

/// Renders a sequence of sets as `(s1, s2, ...)`.
std::string format_tuple(const EffectAlgebra &ea, const std::vector<ElementSet> &v);
std::string format_tuple(const EffectAlgebra &ea, const std::vector<Element> &v);

}  // namespace unsharp
