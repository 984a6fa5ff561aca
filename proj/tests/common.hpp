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

#include <set>
#include <string>
#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/formats.hpp"
#include "unsharp/tense.hpp"

namespace testing {

inline std::string data_path(const std::string &name) { return std::string(UNSHARP_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string &name) { return std::string(UNSHARP_GOLDEN_DIR) + "/" + name; }

inline const unsharp::EffectAlgebra &algebra(const std::string &file) {
  static std::vector<std::pair<std::string, unsharp::EffectAlgebra>> cache;
  for (const auto &[f, ea] : cache) {
    if (f == file) return ea;
  }
  cache.emplace_back(file, unsharp::parse_algebra(unsharp::read_file(data_path(file))));
  return cache.back().second;
}

inline const unsharp::EffectAlgebra &fig1() { return algebra("fig1.ea"); }

inline const unsharp::TimeFrame &ex9_frame() {
  static const unsharp::TimeFrame f = unsharp::parse_frame(unsharp::read_file(data_path("ex9.tf")));
  return f;
}

inline const unsharp::NamedPropositions &ex9_props() {
  static const unsharp::NamedPropositions p =
      unsharp::parse_props(unsharp::read_file(data_path("ex9.pf")), fig1(), ex9_frame().size());
  return p;
}

inline unsharp::Element el(const unsharp::EffectAlgebra &ea, const std::string &name) { return ea.element(name); }

inline unsharp::ElementSet set(const unsharp::EffectAlgebra &ea, std::initializer_list<const char *> names) {
  unsharp::ElementSet s;
  for (const char *n : names) s.insert(ea.element(n));
  return s;
}

inline std::set<std::string> names(const unsharp::EffectAlgebra &ea, unsharp::ElementSet s) {
  std::set<std::string> out;
  for (auto e : s) out.insert(ea.name(e));
  return out;
}

inline unsharp::Proposition prop(const unsharp::EffectAlgebra &ea, std::initializer_list<const char *> values) {
  unsharp::Proposition p;
  for (const char *v : values) p.push_back(ea.element(v));
  return p;
}

inline unsharp::SetProposition setprop(const unsharp::EffectAlgebra &ea,
                                       std::initializer_list<std::initializer_list<const char *>> values) {
  unsharp::SetProposition x;
  for (auto v : values) x.push_back(set(ea, v));
  return x;
}

}  // namespace testing
