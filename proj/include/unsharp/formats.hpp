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

// Line-oriented text formats. '#' starts a comment; sections are introduced by
// a bracketed header on a line of its own.
//
//   algebra  [elements] ids...  [zero] id  [one] id
//            [plus] one row "x: v v - v" per element, '-' for undefined
//            [supplement] optional "x x'" lines, cross-checked
//   frame    [times] ids...  [rel] one "s t" pair per line
//   props    [prop name] v v v   (one value per declared time point)
//   ops      [times] ids...  [prop name] v v v ...
//            [op X name] or [op X *], followed by "t -> v", "t -> {v,w}" or "* -> v"
//
// Element and proposition ids may not be '-' and may not contain '{', '}', ',', ':',
// '#', '[' or ']'. Time ids may contain anything but '#', '[' and ']'.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/frame_induction.hpp"
#include "unsharp/tense.hpp"

namespace unsharp {

struct NamedPropositions {
  std::vector<std::string> names;
  std::vector<Proposition> props;

  /// Throws Error for an unknown name.
  const Proposition &get(std::string_view name) const;
};

/// Syntax and reference checks only; axioms are not verified.
RawAlgebra parse_algebra_raw(std::string_view text);
/// parse_algebra_raw followed by axiom verification (throws AxiomError).
EffectAlgebra parse_algebra(std::string_view text);
TimeFrame parse_frame(std::string_view text);
NamedPropositions parse_props(std::string_view text, const EffectAlgebra &ea, std::size_t times);
OperatorTable parse_ops(std::string_view text, const EffectAlgebra &ea);
/// True when the text contains an [op ...] section.
bool looks_like_ops(std::string_view text);

std::string write_algebra(const EffectAlgebra &ea);
std::string write_frame(const TimeFrame &frame);
std::string write_props(const EffectAlgebra &ea, const NamedPropositions &props);

/// Whole file contents; throws Error when unreadable.
std::string read_file(const std::string &path);

}  // namespace unsharp
