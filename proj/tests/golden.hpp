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

// Reading the transcribed tables and comparing them with rendered output cell
// by cell. Cells are compared as sets, so member order does not matter.

#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

using Cell = std::set<std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::pair<std::string, std::vector<Cell>>> rows;
};

struct Mismatch {
  std::string row;
  std::string column;
  Cell expected;
  Cell actual;
};

inline std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Cell parse_cell(const std::string &text) {
  Cell out;
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    std::stringstream in(text.substr(1, text.size() - 2));
    std::string part;
    while (std::getline(in, part, ',')) out.insert(trim(part));
  } else {
    out.insert(text);
  }
  return out;
}

inline std::vector<std::string> words(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Parses "label | c1 c2 ..." lines. Unless `header` is given, the first such
/// line is the header; comment lines and the rendered dash separator are skipped.
inline Table parse(const std::string &text, const std::vector<std::string> *header = nullptr) {
  Table t;
  std::istringstream in(text);
  bool first = header == nullptr;
  if (header) t.header = *header;
  for (std::string line; std::getline(in, line);) {
    if (trim(line).empty() || trim(line)[0] == '#' || line.find("-+-") != std::string::npos) continue;
    const auto bar = line.rfind(" | ");
    const auto cut = bar == std::string::npos ? line.rfind('|') : bar + 1;
    if (cut == std::string::npos) continue;
    const std::string label = trim(line.substr(0, cut));
    const auto cells = words(line.substr(cut + 1));
    if (first) {
      t.header = cells;
      first = false;
      continue;
    }
    std::vector<Cell> row;
    for (const auto &c : cells) row.push_back(parse_cell(c));
    t.rows.emplace_back(label, row);
  }
  return t;
}

inline std::string read(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string show(const Cell &c) {
  if (c.size() == 1) return *c.begin();
  std::string s = "{";
  for (const auto &m : c) s += (s.size() > 1 ? "," : "") + m;
  return s + "}";
}

/// Cells of `expected` that differ in `actual`, matched by row label and
/// header position. Missing rows or columns are reported with an empty cell.
inline std::vector<Mismatch> diff(const Table &expected, const Table &actual) {
  std::vector<Mismatch> out;
  for (const auto &[label, cells] : expected.rows) {
    const std::vector<Cell> *got = nullptr;
    for (const auto &[l, c] : actual.rows) {
      if (l == label) got = &c;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string col = i < expected.header.size() ? expected.header[i] : std::to_string(i);
      const Cell have = got && i < got->size() ? (*got)[i] : Cell{};
      if (have != cells[i]) out.push_back({label, col, cells[i], have});
    }
  }
  return out;
}

}  // namespace golden
