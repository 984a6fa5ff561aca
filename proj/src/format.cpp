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

#include "unsharp/format.hpp"

namespace unsharp {

std::string format_set(const EffectAlgebra &ea, ElementSet s) {
  if (auto one = s.single()) return ea.name(*one);
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ',';
    out += ea.name(e);
    first = false;
  }
  return out + "}";
}

std::string format_partial(const EffectAlgebra &ea, std::optional<Element> e) { return e ? ea.name(*e) : "-"; }

std::string format_tuple(const EffectAlgebra &ea, const std::vector<ElementSet> &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_set(ea, v[i]);
  }
  return out + ")";
}

std::string format_tuple(const EffectAlgebra &ea, const std::vector<Element> &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += ea.name(v[i]);
  }
  return out + ")";
}

}  // namespace unsharp
