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

#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/report.hpp"
#include "unsharp/tense.hpp"

namespace unsharp {

/// Every law suite that applies: algebra and connective laws always; with a
/// frame also the tense, dynamic, compatibility and frame-induction suites.
/// When `props` is given, compatibility is checked on pairs drawn from it
/// instead of all proposition pairs.
Report run_laws(const EffectAlgebra &ea, const TimeFrame *frame, const std::vector<Proposition> *props,
                const SweepOptions &opts = {});

}  // namespace unsharp
