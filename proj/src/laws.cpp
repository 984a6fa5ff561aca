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

#include "unsharp/laws.hpp"

#include "unsharp/connectives.hpp"
#include "unsharp/frame_induction.hpp"

namespace unsharp {

Report run_laws(const EffectAlgebra &ea, const TimeFrame *frame, const std::vector<Proposition> *props,
                const SweepOptions &opts) {
  Report rep = check_basic_laws(ea, opts.jobs);
  rep.append(check_connective_laws(ea, opts));
  if (!frame) return rep;
  rep.append(check_tense_laws(ea, *frame, opts));
  rep.append(check_dynamic_axioms(ea, *frame, opts));
  rep.append(check_compatibility(ea, *frame, opts, props));
  const auto ops = OperatorTable::induced(ea, *frame);
  rep.append(check_induced_bounds(ea, ops, opts));
  rep.append(check_induced_equivalence(ea, *frame, opts));
  rep.append(check_extension(ea, ops, opts));
  return rep;
}

}  // namespace unsharp
