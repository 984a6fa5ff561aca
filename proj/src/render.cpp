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

#include "unsharp/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "unsharp/connectives.hpp"
#include "unsharp/format.hpp"

namespace unsharp {

std::size_t display_width(const std::string &s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

namespace {

std::string pad(const std::string &s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

std::string render(const TextTable &table) {
  std::size_t label = display_width(table.corner);
  for (const auto &r : table.rows) label = std::max(label, display_width(r.first));
  std::vector<std::size_t> width(table.header.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = display_width(table.header[c]);
    for (const auto &r : table.rows) width[c] = std::max(width[c], display_width(r.second.at(c)));
  }
  auto line = [&](const std::string &head, const std::vector<std::string> &cells) {
    std::string s = pad(head, label) + " |";
    for (std::size_t c = 0; c < cells.size(); ++c) s += " " + pad(cells[c], width[c]);
    return rstrip(s) + "\n";
  };
  std::size_t body = 0;
  for (std::size_t c = 0; c < width.size(); ++c) body += width[c] + (c ? 1 : 0);
  std::string out = line(table.corner, table.header);
  out += std::string(label, '-') + "-+-" + std::string(body, '-') + "\n";
  for (const auto &r : table.rows) out += line(r.first, r.second);
  return out;
}

std::optional<TableOp> table_op_from_name(std::string_view name) {
  if (name == "plus") return TableOp::kPlus;
  if (name == "odot") return TableOp::kOdot;
  if (name == "imp-arrow") return TableOp::kImpArrow;
  if (name == "imp-squig") return TableOp::kImpSquig;
  if (name == "imp-double") return TableOp::kImpDouble;
  if (name == "otimes") return TableOp::kOtimes;
  return std::nullopt;
}

const char *symbol(TableOp op) {
  switch (op) {
    case TableOp::kPlus:
      return "+";
    case TableOp::kOdot:
      return "⊙";
    case TableOp::kImpArrow:
      return "→";
    case TableOp::kImpSquig:
      return "⇝";
    case TableOp::kImpDouble:
      return "⇒";
    case TableOp::kOtimes:
      return "⊗";
  }
  return "?";
}

TextTable operation_table(const EffectAlgebra &ea, TableOp op) {
  TextTable t;
  t.corner = symbol(op);
  t.header = ea.names();
  for (Element x = 0; x < ea.size(); ++x) {
    std::vector<std::string> cells;
    for (Element y = 0; y < ea.size(); ++y) {
      switch (op) {
        case TableOp::kPlus:
          cells.push_back(format_partial(ea, ea.plus(x, y)));
          break;
        case TableOp::kOdot:
          cells.push_back(format_partial(ea, ea.odot(x, y)));
          break;
        case TableOp::kImpArrow:
          cells.push_back(format_set(ea, imp_arrow(ea, x, y)));
          break;
        case TableOp::kImpSquig:
          cells.push_back(format_partial(ea, imp_squig(ea, x, y)));
          break;
        case TableOp::kImpDouble:
          cells.push_back(format_set(ea, imp_double(ea, x, y)));
          break;
        case TableOp::kOtimes:
          cells.push_back(format_set(ea, otimes(ea, x, y)));
          break;
      }
    }
    t.rows.emplace_back(ea.name(x), std::move(cells));
  }
  return t;
}

TextTable proposition_table(const EffectAlgebra &ea, const TimeFrame &frame,
                            const std::vector<std::pair<std::string, SetProposition>> &rows) {
  TextTable t;
  t.corner = "t";
  t.header = frame.names();
  for (const auto &[label, x] : rows) {
    std::vector<std::string> cells;
    for (ElementSet s : x) cells.push_back(format_set(ea, s));
    t.rows.emplace_back(label, std::move(cells));
  }
  return t;
}

std::string render_covers(const EffectAlgebra &ea) {
  std::string out;
  for (auto [x, y] : ea.order().covers()) out += ea.name(x) + " < " + ea.name(y) + "\n";
  return out;
}

std::string render_pairs(const std::vector<std::string> &names,
                         const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
  std::string out;
  for (auto [s, t] : pairs) out += names.at(s) + " " + names.at(t) + "\n";
  return out;
}

std::string render_report(const Report &report) {
  std::ostringstream out;
  for (const auto &c : report.checks()) {
    out << to_string(c.status) << " " << c.id << " (" << c.cases << (c.sampled ? " sampled" : "") << (c.cases == 1 ? " case" : " cases");
    if (c.failures) out << ", " << c.failures << " failing";
    out << ")";
    if (!c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  out << report.count(Status::kPass) << " passed, " << report.count(Status::kFail) << " failed, "
      << report.count(Status::kHypothesisFailed) << " with unmet hypothesis\n";
  return out.str();
}

std::string render_report_lines(const Report &report) {
  std::string out;
  for (const auto &c : report.checks()) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["status"] = to_string(c.status);
    j["witness"] = c.witness;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["sampled"] = c.sampled;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace unsharp
